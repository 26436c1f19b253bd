#pragma once

#include <cstddef>
#include <ostream>
#include <string_view>
#include <vector>

#include "textseg/segmentation.hpp"
#include "textseg/text_prep.hpp"

namespace textseg::cli {

/// One segment in element indices and in bytes of the source text.
struct SegmentExtent {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t byte_begin = 0;
    std::size_t byte_end = 0;
};

/// Requires `doc.spans` to be present and `seg` to number the elements of `doc`.
std::vector<SegmentExtent> segment_extents(const Segmentation& seg, const TokenizedDocument& doc);

/// Terminal output: segments on alternating background colours.
void render_ansi(std::ostream& out, std::string_view text, const std::vector<SegmentExtent>& extents);

/// HTML fragment: one span per segment with alternating class names
/// "seg seg-a" / "seg seg-b".
void render_html(std::ostream& out, std::string_view text, const std::vector<SegmentExtent>& extents);

void html_escape(std::ostream& out, std::string_view text);

}  // namespace textseg::cli
