#pragma once

#include <string>

namespace rede {

enum class LogLevel { kDebug = 0, kInfo = 1, kWarn = 2, kError = 3, kOff = 4 };

// Initial level comes from the REDE_LOG environment variable
// (debug|info|warn|error|off), defaulting to info.
LogLevel log_level();
void set_log_level(LogLevel level);
bool log_level_from_string(const std::string& s, LogLevel* out);

// All diagnostics go to stderr; stdout is reserved for results.
void log_message(LogLevel level, const std::string& msg);
void log_debug(const std::string& msg);
void log_info(const std::string& msg);
void log_warn(const std::string& msg);
void log_error(const std::string& msg);

}  // namespace rede
