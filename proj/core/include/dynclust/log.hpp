#pragma once

#include <string_view>

namespace dynclust {

enum class LogLevel { kOff = 0, kWarn = 1, kInfo = 2, kDebug = 3, kTrace = 4 };

/// Verbosity from the DYNCLUST_LOG environment variable (off, warn, info,
/// debug, trace, or 0-4). Read once; defaults to warn.
LogLevel log_level();
void set_log_level(LogLevel level);

void log_message(LogLevel level, std::string_view message);

inline bool log_enabled(LogLevel level) { return level <= log_level(); }

} // namespace dynclust
