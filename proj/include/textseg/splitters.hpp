#pragma once

#include <cstddef>
#include <string_view>

#include "textseg/scoring.hpp"
#include "textseg/segmentation.hpp"

namespace textseg {

enum class SplitterKind { greedy, dp, refine };

std::string_view to_string(SplitterKind kind);
SplitterKind splitter_kind_from_string(std::string_view name);

struct SplitResult {
    Segmentation segmentation;
    double cost = 0.0;
    /// Sweeps performed by refine(); zero for the other splitters.
    std::size_t iterations_used = 0;
    bool converged = true;
};

/// Starting from (N), inserts K - 1 boundaries one at a time, each at the
/// position in [1, N) that minimizes the cost (leftmost on ties).
/// Throws std::invalid_argument unless 1 <= K <= N.
SplitResult greedy_split(const Scorer& scorer, std::size_t k);

/// S(n, 1) = sigma(0, n); S(n, k) = min over l of S(l, k - 1) (+) sigma(l, n)
/// under the scorer's key, leftmost l on ties. Globally optimal for additive
/// scalar scorers; for the ratio objective it is the same recursion applied
/// as-is, without an optimality guarantee.
SplitResult dp_split(const Scorer& scorer, std::size_t k);

inline constexpr std::size_t kDefaultRefineIterations = 20;

/// Moves each interior boundary in turn, left to right, to the cost-minimizing
/// position strictly between its neighbours (leftmost on ties), applying each
/// move immediately. Stops after a sweep that moves nothing (converged) or
/// after `max_iters` sweeps.
SplitResult refine(const Scorer& scorer, const Segmentation& start, std::size_t max_iters = kDefaultRefineIterations);

/// Runs the named strategy; refine starts from the greedy result.
SplitResult split(SplitterKind kind, const Scorer& scorer, std::size_t k,
                  std::size_t max_iters = kDefaultRefineIterations);

}  // namespace textseg
