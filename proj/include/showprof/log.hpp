#pragma once

#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>

// Minimal stderr logger. Verbosity comes from the SHOWPROF_LOG environment
// variable only (error, warn, info, debug); default is warn.

namespace showprof::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

inline Level threshold() {
    static Level lvl = [] {
        const char* env = std::getenv("SHOWPROF_LOG");
        if (!env) return Level::warn;
        if (std::strcmp(env, "error") == 0) return Level::error;
        if (std::strcmp(env, "info") == 0) return Level::info;
        if (std::strcmp(env, "debug") == 0) return Level::debug;
        return Level::warn;
    }();
    return lvl;
}

inline void vlog(Level lvl, const char* tag, const char* fmt, std::va_list ap) {
    if (lvl > threshold()) return;
    std::fprintf(stderr, "[%s] ", tag);
    std::vfprintf(stderr, fmt, ap);
    std::fputc('\n', stderr);
}

inline void error(const char* fmt, ...) {
    std::va_list ap;
    va_start(ap, fmt);
    vlog(Level::error, "error", fmt, ap);
    va_end(ap);
}

inline void warn(const char* fmt, ...) {
    std::va_list ap;
    va_start(ap, fmt);
    vlog(Level::warn, "warn", fmt, ap);
    va_end(ap);
}

inline void info(const char* fmt, ...) {
    std::va_list ap;
    va_start(ap, fmt);
    vlog(Level::info, "info", fmt, ap);
    va_end(ap);
}

inline void debug(const char* fmt, ...) {
    std::va_list ap;
    va_start(ap, fmt);
    vlog(Level::debug, "debug", fmt, ap);
    va_end(ap);
}

}  // namespace showprof::log
