#include "dynclust/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace dynclust {
namespace {

LogLevel parse_level(const char* raw) {
    if (raw == nullptr) return LogLevel::kWarn;
    const std::string s(raw);
    if (s == "off" || s == "0") return LogLevel::kOff;
    if (s == "warn" || s == "1") return LogLevel::kWarn;
    if (s == "info" || s == "2") return LogLevel::kInfo;
    if (s == "debug" || s == "3") return LogLevel::kDebug;
    if (s == "trace" || s == "4") return LogLevel::kTrace;
    return LogLevel::kWarn;
}

std::atomic<int>& level_storage() {
    static std::atomic<int> level{static_cast<int>(parse_level(std::getenv("DYNCLUST_LOG")))};
    return level;
}

const char* tag(LogLevel level) {
    switch (level) {
    case LogLevel::kWarn: return "warn";
    case LogLevel::kInfo: return "info";
    case LogLevel::kDebug: return "debug";
    case LogLevel::kTrace: return "trace";
    default: return "";
    }
}

} // namespace

LogLevel log_level() { return static_cast<LogLevel>(level_storage().load(std::memory_order_relaxed)); }

void set_log_level(LogLevel level) { level_storage().store(static_cast<int>(level)); }

void log_message(LogLevel level, std::string_view message) {
    if (!log_enabled(level) || level == LogLevel::kOff) return;
    static std::mutex mu;
    std::lock_guard lock(mu);
    std::cerr << "[dynclust " << tag(level) << "] " << message << '\n';
}

} // namespace dynclust
