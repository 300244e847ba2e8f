#include <gtest/gtest.h>

#include <cmath>

#include "dynclust/radius.hpp"

namespace dynclust {
namespace {

TEST(RoundUpPow, OneIsTheZerothPower) {
    EXPECT_EQ(round_up_pow(1.0, 0.1), 1.0);
    EXPECT_EQ(round_up_pow(1.0, 0.5), 1.0);
}

TEST(RoundUpPow, ExactPowerIsKept) { EXPECT_EQ(round_up_pow(1.5, 0.5), 1.5); }

TEST(RoundUpPow, RoundsToNextPower) {
    // 1.5^3 = 3.375 < 5 <= 1.5^4 = 5.0625
    EXPECT_EQ(round_up_pow(5.0, 0.5), 5.0625);
}

TEST(RoundUpPow, BelowOneMapsToOne) { EXPECT_EQ(round_up_pow(0.25, 0.1), 1.0); }

TEST(RoundUpPow, RejectsNonPositive) {
    EXPECT_THROW(round_up_pow(0.0, 0.1), std::invalid_argument);
    EXPECT_THROW(round_up_pow(-2.0, 0.1), std::invalid_argument);
    EXPECT_THROW(round_up_pow(2.0, 0.0), std::invalid_argument);
}

TEST(RoundUpPow, IdempotentAndMinimal) {
    for (double eps : {0.05, 0.1, 0.25, 0.5}) {
        for (double x = 1.0; x < 1e6; x = x * 1.37 + 0.3) {
            const double r = round_up_pow(x, eps);
            EXPECT_GE(r, x);
            EXPECT_LT(r / (1.0 + eps), x);
            EXPECT_EQ(round_up_pow(r, eps), r);
        }
    }
}

TEST(RadiusScale, InfiniteRadius) {
    RadiusScale scale(0.1);
    EXPECT_TRUE(scale.round_up(kInfinity).is_infinite());
    EXPECT_EQ(scale.value(PowerRadius::infinite()), kInfinity);
    EXPECT_LT(PowerRadius(1000), PowerRadius::infinite());
}

TEST(RadiusScale, FloorExponentIdentifiesClass) {
    RadiusScale scale(0.5);
    EXPECT_EQ(scale.floor_exponent(1.0), 0);
    EXPECT_EQ(scale.floor_exponent(1.49), 0);
    EXPECT_EQ(scale.floor_exponent(1.5), 1);
    EXPECT_EQ(scale.floor_exponent(5.0625), 4);
    EXPECT_EQ(scale.floor_exponent(5.0), 3);
    EXPECT_THROW(scale.floor_exponent(0.5), std::invalid_argument);
}

} // namespace
} // namespace dynclust
