#pragma once

#include <string>
#include <string_view>

namespace textseg {

/// Porter (1980) suffix-stripping stemmer, matching the output of the
/// author's reference implementation (including its "bli" and "logi" rules).
/// Words that are not entirely lowercase ASCII letters are returned unchanged,
/// as are words of one or two letters.
std::string porter_stem(std::string_view word);

}  // namespace textseg
