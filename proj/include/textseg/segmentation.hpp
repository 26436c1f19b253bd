#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace textseg {

/// Boundaries s_1 < ... < s_K = N; segment k covers elements [s_{k-1}, s_k)
/// with s_0 = 0.
struct Segmentation {
    std::vector<std::size_t> boundaries;
    std::size_t n_elements = 0;

    Segmentation() = default;
    Segmentation(std::vector<std::size_t> b, std::size_t n) : boundaries(std::move(b)), n_elements(n) {}

    std::size_t num_segments() const { return boundaries.size(); }
    std::size_t segment_begin(std::size_t k) const { return k == 0 ? 0 : boundaries[k - 1]; }
    std::size_t segment_end(std::size_t k) const { return boundaries[k]; }

    /// Throws std::invalid_argument describing the first broken invariant.
    void validate() const;
    bool valid() const;

    std::vector<std::size_t> segment_lengths() const;
    static Segmentation from_lengths(const std::vector<std::size_t>& lengths);

    /// The single-segment segmentation (N).
    static Segmentation whole(std::size_t n) { return {{n}, n}; }

    std::string to_string() const;

    bool operator==(const Segmentation&) const = default;
};

}  // namespace textseg
