#include "rede/logging.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>

namespace rede {

namespace {

LogLevel initial_level() {
  const char* env = std::getenv("REDE_LOG");
  LogLevel lvl = LogLevel::kInfo;
  if (env != nullptr) {
    log_level_from_string(env, &lvl);
  }
  return lvl;
}

std::atomic<LogLevel>& level_ref() {
  static std::atomic<LogLevel> level{initial_level()};
  return level;
}

const char* level_name(LogLevel level) {
  switch (level) {
    case LogLevel::kDebug: return "debug";
    case LogLevel::kInfo: return "info";
    case LogLevel::kWarn: return "warn";
    case LogLevel::kError: return "error";
    case LogLevel::kOff: return "off";
  }
  return "?";
}

}  // namespace

LogLevel log_level() { return level_ref().load(std::memory_order_relaxed); }

void set_log_level(LogLevel level) {
  level_ref().store(level, std::memory_order_relaxed);
}

bool log_level_from_string(const std::string& s, LogLevel* out) {
  if (s == "debug") *out = LogLevel::kDebug;
  else if (s == "info") *out = LogLevel::kInfo;
  else if (s == "warn" || s == "warning") *out = LogLevel::kWarn;
  else if (s == "error") *out = LogLevel::kError;
  else if (s == "off" || s == "none") *out = LogLevel::kOff;
  else return false;
  return true;
}

void log_message(LogLevel level, const std::string& msg) {
  if (level < log_level()) return;
  std::fprintf(stderr, "[rede] %s: %s\n", level_name(level), msg.c_str());
}

void log_debug(const std::string& msg) { log_message(LogLevel::kDebug, msg); }
void log_info(const std::string& msg) { log_message(LogLevel::kInfo, msg); }
void log_warn(const std::string& msg) { log_message(LogLevel::kWarn, msg); }
void log_error(const std::string& msg) { log_message(LogLevel::kError, msg); }

}  // namespace rede
