#pragma once

#include <cstddef>
#include <optional>

#include "textseg/segmentation.hpp"

namespace textseg {

/// Probe distance derived from the reference: round(N / (2 K)) - 1 with
/// halves rounded away from zero, and never below 1.
std::size_t default_k(const Segmentation& ref);

/// Boundaries s of `seg` with i < s <= j, not counting the final boundary N.
std::size_t boundaries_between(const Segmentation& seg, std::size_t i, std::size_t j);

/// Fraction of probes i = 1 .. N - k on which reference and hypothesis
/// disagree about whether positions i and i + k share a segment, i.e.
/// whether no boundary falls in (i, i + k]. Not symmetric in its arguments:
/// k defaults to default_k(ref).
///
/// Throws std::invalid_argument when the two segmentations cover different
/// N, when either is invalid, or when no probe fits (k >= N).
double pk(const Segmentation& ref, const Segmentation& hyp, std::optional<std::size_t> k = std::nullopt);

/// Fraction of windows (i, i + k], i = 1 .. N - k, in which the two
/// segmentations place a different number of boundaries.
double window_diff(const Segmentation& ref, const Segmentation& hyp, std::optional<std::size_t> k = std::nullopt);

struct EvalReport {
    double pk = 0.0;
    double wd = 0.0;
    std::size_t k_used = 0;
    std::size_t n_probes = 0;
};

EvalReport evaluate(const Segmentation& ref, const Segmentation& hyp, std::optional<std::size_t> k = std::nullopt);

}  // namespace textseg
