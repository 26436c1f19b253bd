#include "textseg/choi_format.hpp"

#include <algorithm>

#include "textseg/error.hpp"

namespace textseg {
namespace {

std::string_view trim(std::string_view s) {
    auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; };
    while (!s.empty() && space(s.front())) s.remove_prefix(1);
    while (!s.empty() && space(s.back())) s.remove_suffix(1);
    return s;
}

bool looks_like_delimiter(std::string_view line) {
    if (line.starts_with(kChoiDelimiter)) return true;
    return line.size() >= 3 && std::all_of(line.begin(), line.end(), [](char c) { return c == '='; });
}

}  // namespace

std::size_t ChoiDocument::line_count() const {
    std::size_t n = 0;
    for (const auto& seg : segments) n += seg.size();
    return n;
}

ChoiDocument parse_choi(std::istream& in, const std::string& source) {
    ChoiDocument doc;
    std::vector<std::string> current;
    bool seen_delimiter = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (looks_like_delimiter(line)) {
            if (line != kChoiDelimiter)
                throw DataError(source + ":" + std::to_string(line_no) + ": malformed delimiter line '" +
                                std::string(line) + "'");
            if (current.empty()) {
                if (seen_delimiter || !doc.segments.empty())
                    throw DataError(source + ":" + std::to_string(line_no) + ": empty segment");
            } else {
                doc.segments.push_back(std::move(current));
                current.clear();
            }
            seen_delimiter = true;
            continue;
        }
        current.emplace_back(line);
    }
    if (!current.empty()) doc.segments.push_back(std::move(current));
    if (doc.segments.empty()) throw DataError(source + ": no segments");
    return doc;
}

void write_choi(std::ostream& out, const ChoiDocument& doc) {
    for (const auto& seg : doc.segments) {
        out << kChoiDelimiter << '\n';
        for (const auto& line : seg) out << line << '\n';
    }
    out << kChoiDelimiter << '\n';
}

}  // namespace textseg
