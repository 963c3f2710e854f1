#include "ssmguard/common/log.hpp"

#include <cstdarg>
#include <cstdlib>
#include <cstring>

namespace ssmguard::log {

namespace {

Level parse_env() {
  const char* env = std::getenv("SSMGUARD_LOG");
  if (!env) return Level::warn;
  if (std::strcmp(env, "error") == 0) return Level::error;
  if (std::strcmp(env, "warn") == 0) return Level::warn;
  if (std::strcmp(env, "info") == 0) return Level::info;
  if (std::strcmp(env, "debug") == 0) return Level::debug;
  return Level::warn;
}

Level& threshold_ref() {
  static Level level = parse_env();
  return level;
}

const char* tag(Level level) {
  switch (level) {
    case Level::error: return "error";
    case Level::warn: return "warn";
    case Level::info: return "info";
    case Level::debug: return "debug";
  }
  return "?";
}

}  // namespace

Level threshold() { return threshold_ref(); }

void set_threshold(Level level) { threshold_ref() = level; }

bool enabled(Level level) { return static_cast<int>(level) <= static_cast<int>(threshold()); }

void write(Level level, const char* fmt, ...) {
  if (!enabled(level)) return;
  std::fprintf(stderr, "[ssmguard %s] ", tag(level));
  va_list args;
  va_start(args, fmt);
  std::vfprintf(stderr, fmt, args);
  va_end(args);
  std::fputc('\n', stderr);
}

}  // namespace ssmguard::log
