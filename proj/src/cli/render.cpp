#include "cli/render.hpp"

#include <stdexcept>

namespace textseg::cli {
namespace {

constexpr std::string_view kBackgrounds[2] = {"\x1b[48;5;153m", "\x1b[48;5;223m"};
constexpr std::string_view kReset = "\x1b[0m";

// Text shown for segment k runs from its first byte to the first byte of the
// next segment, so whitespace between segments stays visible.
std::string_view slice(std::string_view text, const std::vector<SegmentExtent>& extents, std::size_t k) {
    const std::size_t from = k == 0 ? 0 : extents[k].byte_begin;
    const std::size_t to = k + 1 == extents.size() ? text.size() : extents[k + 1].byte_begin;
    return text.substr(from, to - from);
}

}  // namespace

std::vector<SegmentExtent> segment_extents(const Segmentation& seg, const TokenizedDocument& doc) {
    if (doc.spans.size() != doc.size()) throw std::invalid_argument("document has no source offsets");
    if (seg.n_elements != doc.size()) throw std::invalid_argument("segmentation does not match the document");
    std::vector<SegmentExtent> out;
    for (std::size_t k = 0; k < seg.num_segments(); ++k) {
        SegmentExtent e;
        e.begin = seg.segment_begin(k);
        e.end = seg.segment_end(k);
        e.byte_begin = doc.spans[e.begin].offset;
        e.byte_end = doc.spans[e.end - 1].end();
        out.push_back(e);
    }
    return out;
}

void render_ansi(std::ostream& out, std::string_view text, const std::vector<SegmentExtent>& extents) {
    for (std::size_t k = 0; k < extents.size(); ++k) {
        const auto bg = kBackgrounds[k % 2];
        out << bg;
        for (char c : slice(text, extents, k)) {
            if (c == '\n')
                out << kReset << '\n' << bg;
            else
                out << c;
        }
        out << kReset;
    }
    if (!text.empty() && text.back() != '\n') out << '\n';
}

void html_escape(std::ostream& out, std::string_view text) {
    for (char c : text) {
        switch (c) {
            case '&': out << "&amp;"; break;
            case '<': out << "&lt;"; break;
            case '>': out << "&gt;"; break;
            case '"': out << "&quot;"; break;
            default: out << c;
        }
    }
}

void render_html(std::ostream& out, std::string_view text, const std::vector<SegmentExtent>& extents) {
    out << "<div class=\"textseg\">\n";
    for (std::size_t k = 0; k < extents.size(); ++k) {
        out << "<span class=\"seg seg-" << (k % 2 ? 'b' : 'a') << "\" data-segment=\"" << k << "\">";
        html_escape(out, slice(text, extents, k));
        out << "</span>";
    }
    out << "\n</div>\n";
}

}  // namespace textseg::cli
