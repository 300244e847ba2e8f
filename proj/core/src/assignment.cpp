#include "dynclust/assignment.hpp"

#include <numeric>
#include <stdexcept>

namespace dynclust {

Assignment::Assignment(std::size_t n) : sigma_(n), counts_(n, 1) {
    std::iota(sigma_.begin(), sigma_.end(), VertexId{0});
}

void Assignment::assign(VertexId v, VertexId center) {
    if (v >= sigma_.size() || center >= sigma_.size()) throw std::out_of_range("assignment index out of range");
    --counts_[sigma_[v]];
    sigma_[v] = center;
    ++counts_[center];
}

VertexSet Assignment::image() const {
    VertexSet out(sigma_.size());
    for (VertexId s = 0; s < counts_.size(); ++s) {
        if (counts_[s] > 0) out.insert(s);
    }
    return out;
}

} // namespace dynclust
