#include "pauc/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace pauc::log {

namespace {

Level parse_env() {
    const char *env = std::getenv("PAUC_LOG");
    if (env == nullptr) {
        return Level::error;
    }
    if (std::strcmp(env, "debug") == 0) {
        return Level::debug;
    }
    if (std::strcmp(env, "info") == 0) {
        return Level::info;
    }
    return Level::error;
}

Level &current() {
    static Level lv = parse_env();
    return lv;
}

void emit(const char *tag, const std::string &msg) {
    std::fprintf(stderr, "[%s] %s\n", tag, msg.c_str());
}

} // namespace

Level level() { return current(); }

void set_level(Level lv) { current() = lv; }

void error(const std::string &msg) { emit("error", msg); }

void info(const std::string &msg) {
    if (current() >= Level::info) {
        emit("info", msg);
    }
}

void debug(const std::string &msg) {
    if (current() >= Level::debug) {
        emit("debug", msg);
    }
}

} // namespace pauc::log
