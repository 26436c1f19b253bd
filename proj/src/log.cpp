#include "textseg/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace textseg::log {
namespace {

std::atomic<Level> g_level{Level::warning};
std::mutex g_mutex;

void emit(std::string_view tag, std::string_view message) {
    std::lock_guard lock(g_mutex);
    std::cerr << "textseg: " << tag << ": " << message << '\n';
}

}  // namespace

void set_level(Level level) { g_level.store(level); }
Level level() { return g_level.load(); }

void warn(std::string_view message) {
    if (level() >= Level::warning) emit("warning", message);
}

void info(std::string_view message) {
    if (level() >= Level::info) emit("info", message);
}

}  // namespace textseg::log
