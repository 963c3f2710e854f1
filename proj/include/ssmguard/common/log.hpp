#pragma once

#include <cstdio>

namespace ssmguard::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

// Threshold comes from SSMGUARD_LOG (error|warn|info|debug); default warn.
Level threshold();
void set_threshold(Level level);
bool enabled(Level level);
void write(Level level, const char* fmt, ...);

}  // namespace ssmguard::log

#define SSMG_LOG_ERROR(...) ::ssmguard::log::write(::ssmguard::log::Level::error, __VA_ARGS__)
#define SSMG_LOG_WARN(...) ::ssmguard::log::write(::ssmguard::log::Level::warn, __VA_ARGS__)
#define SSMG_LOG_INFO(...) ::ssmguard::log::write(::ssmguard::log::Level::info, __VA_ARGS__)
#define SSMG_LOG_DEBUG(...) ::ssmguard::log::write(::ssmguard::log::Level::debug, __VA_ARGS__)
