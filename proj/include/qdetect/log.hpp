#pragma once

#include <string_view>

namespace qdetect::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

/// Threshold read from QDETECT_LOG (error|warn|info|debug); default warn.
Level threshold();

/// Writes one diagnostic line to stderr when level passes the threshold.
/// Stdout is reserved for data.
void emit(Level level, std::string_view message);

inline void error(std::string_view m) { emit(Level::error, m); }
inline void warn(std::string_view m) { emit(Level::warn, m); }
inline void info(std::string_view m) { emit(Level::info, m); }
inline void debug(std::string_view m) { emit(Level::debug, m); }

}  // namespace qdetect::log
