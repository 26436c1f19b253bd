#pragma once

#include <string_view>

namespace textseg::log {

enum class Level { quiet, warning, info };

void set_level(Level level);
Level level();

void warn(std::string_view message);
void info(std::string_view message);

}  // namespace textseg::log
