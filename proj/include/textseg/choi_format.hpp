#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace textseg {

/// Segment delimiter line of the reference file format: exactly ten '='.
inline constexpr std::string_view kChoiDelimiter = "==========";

/// Contents of a reference-format file: segments of non-blank lines.
struct ChoiDocument {
    std::vector<std::vector<std::string>> segments;

    std::size_t line_count() const;
    bool operator==(const ChoiDocument&) const = default;
};

/// Leading and trailing delimiters are optional. Blank lines are skipped.
/// Throws DataError naming `source` and the line number for a malformed
/// delimiter or an empty segment.
ChoiDocument parse_choi(std::istream& in, const std::string& source = "<input>");

/// Canonical form: a delimiter before every segment and one after the last.
void write_choi(std::ostream& out, const ChoiDocument& doc);

}  // namespace textseg
