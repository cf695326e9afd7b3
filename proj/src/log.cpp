#include "qdetect/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace qdetect::log {

Level threshold() {
    static const Level cached = [] {
        const char* env = std::getenv("QDETECT_LOG");
        if (env == nullptr) return Level::warn;
        const std::string v(env);
        if (v == "error") return Level::error;
        if (v == "warn") return Level::warn;
        if (v == "info") return Level::info;
        if (v == "debug") return Level::debug;
        return Level::warn;
    }();
    return cached;
}

void emit(Level level, std::string_view message) {
    if (static_cast<int>(level) > static_cast<int>(threshold())) return;
    static constexpr const char* names[] = {"error", "warn", "info", "debug"};
    std::cerr << "[" << names[static_cast<int>(level)] << "] " << message << "\n";
}

}  // namespace qdetect::log
