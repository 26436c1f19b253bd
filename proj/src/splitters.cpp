#include "textseg/splitters.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace textseg {
namespace {

void check_k(const Scorer& scorer, std::size_t k) {
    if (k < 1 || k > scorer.size())
        throw std::invalid_argument("number of segments K = " + std::to_string(k) + " must lie in [1, " +
                                    std::to_string(scorer.size()) + "]");
}

// Cached per-segment scores for a fixed boundary list. Costs of candidate
// moves are folded left to right in segment order, exactly as total_cost()
// does, so equal segmentations always get bit-identical costs.
class SegmentCache {
public:
    SegmentCache(const Scorer& scorer, std::vector<std::size_t> boundaries)
        : scorer_(scorer), b_(std::move(boundaries)) {
        scores_.reserve(b_.size());
        for (std::size_t t = 0; t < b_.size(); ++t) scores_.push_back(scorer_.segment_score(begin(t), b_[t]));
    }

    std::size_t begin(std::size_t t) const { return t == 0 ? 0 : b_[t - 1]; }
    const std::vector<std::size_t>& boundaries() const { return b_; }

    // Fold of segments [0, t).
    ScoreValue prefix(std::size_t t, bool& empty) const {
        ScoreValue acc;
        empty = t == 0;
        for (std::size_t u = 0; u < t; ++u) acc = u == 0 ? scores_[0] : scorer_.aggregate(acc, scores_[u]);
        return acc;
    }

    // Cost when the elements [lo, hi) form the two segments [lo, cut) and
    // [cut, hi), preceded by `prefix_acc` and followed by cached segments from
    // index `resume` on.
    double cost_with(const ScoreValue& prefix_acc, bool prefix_empty, std::size_t lo, std::size_t hi,
                     std::size_t cut, std::size_t resume) const {
        ScoreValue acc = scorer_.segment_score(lo, cut);
        if (!prefix_empty) acc = scorer_.aggregate(prefix_acc, acc);
        acc = scorer_.aggregate(acc, scorer_.segment_score(cut, hi));
        for (std::size_t u = resume; u < scores_.size(); ++u) acc = scorer_.aggregate(acc, scores_[u]);
        return scorer_.key(acc);
    }

    void insert(std::size_t t, std::size_t cut) {
        const std::size_t lo = begin(t);
        b_.insert(b_.begin() + static_cast<std::ptrdiff_t>(t), cut);
        scores_[t] = scorer_.segment_score(cut, b_[t + 1]);
        scores_.insert(scores_.begin() + static_cast<std::ptrdiff_t>(t), scorer_.segment_score(lo, cut));
    }

    void move(std::size_t idx, std::size_t pos) {
        b_[idx] = pos;
        scores_[idx] = scorer_.segment_score(begin(idx), pos);
        scores_[idx + 1] = scorer_.segment_score(pos, b_[idx + 1]);
    }

private:
    const Scorer& scorer_;
    std::vector<std::size_t> b_;
    std::vector<ScoreValue> scores_;
};

}  // namespace

std::string_view to_string(SplitterKind kind) {
    switch (kind) {
        case SplitterKind::greedy: return "greedy";
        case SplitterKind::dp: return "dp";
        case SplitterKind::refine: return "refine";
    }
    return "greedy";
}

SplitterKind splitter_kind_from_string(std::string_view name) {
    if (name == "greedy") return SplitterKind::greedy;
    if (name == "dp") return SplitterKind::dp;
    if (name == "refine") return SplitterKind::refine;
    throw std::invalid_argument("unknown splitter '" + std::string(name) + "'");
}

SplitResult greedy_split(const Scorer& scorer, std::size_t k) {
    check_k(scorer, k);
    const std::size_t n = scorer.size();
    SegmentCache cache(scorer, {n});
    for (std::size_t step = 1; step < k; ++step) {
        double best_cost = std::numeric_limits<double>::infinity();
        std::size_t best_cut = 0, best_seg = 0;
        for (std::size_t t = 0; t < cache.boundaries().size(); ++t) {
            const std::size_t lo = cache.begin(t), hi = cache.boundaries()[t];
            if (hi - lo < 2) continue;
            bool empty = false;
            const ScoreValue pre = cache.prefix(t, empty);
            for (std::size_t cut = lo + 1; cut < hi; ++cut) {
                const double c = cache.cost_with(pre, empty, lo, hi, cut, t + 1);
                if (c < best_cost || best_cut == 0) {
                    best_cost = c;
                    best_cut = cut;
                    best_seg = t;
                }
            }
        }
        cache.insert(best_seg, best_cut);
    }
    SplitResult out;
    out.segmentation = Segmentation(cache.boundaries(), n);
    out.cost = total_cost(scorer, out.segmentation);
    return out;
}

SplitResult dp_split(const Scorer& scorer, std::size_t k) {
    check_k(scorer, k);
    const std::size_t n = scorer.size();
    // best[j][m]: best aggregate for the first m elements in j + 1 segments.
    std::vector<std::vector<ScoreValue>> best(k, std::vector<ScoreValue>(n + 1));
    std::vector<std::vector<std::size_t>> back(k, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t m = 1; m <= n - (k - 1); ++m) best[0][m] = scorer.segment_score(0, m);
    for (std::size_t j = 1; j < k; ++j) {
        const std::size_t m_max = n - (k - 1 - j);
        const std::size_t m_min = j == k - 1 ? n : j + 1;
        for (std::size_t m = m_min; m <= m_max; ++m) {
            double best_key = std::numeric_limits<double>::infinity();
            bool found = false;
            for (std::size_t l = j; l < m; ++l) {
                const ScoreValue cand = scorer.aggregate(best[j - 1][l], scorer.segment_score(l, m));
                const double key = scorer.key(cand);
                if (!found || key < best_key) {
                    best_key = key;
                    best[j][m] = cand;
                    back[j][m] = l;
                    found = true;
                }
            }
        }
    }
    std::vector<std::size_t> boundaries(k);
    std::size_t m = n;
    for (std::size_t j = k; j-- > 0;) {
        boundaries[j] = m;
        m = back[j][m];
    }
    SplitResult out;
    out.segmentation = Segmentation(std::move(boundaries), n);
    out.cost = total_cost(scorer, out.segmentation);
    return out;
}

SplitResult refine(const Scorer& scorer, const Segmentation& start, std::size_t max_iters) {
    total_cost(scorer, start);  // validates against the scorer
    SegmentCache cache(scorer, start.boundaries);
    const std::size_t k = start.num_segments();
    SplitResult out;
    out.converged = true;
    if (k > 1) {
        out.converged = false;
        for (std::size_t sweep = 0; sweep < max_iters; ++sweep) {
            bool moved = false;
            for (std::size_t idx = 0; idx + 1 < k; ++idx) {
                const std::size_t lo = cache.begin(idx), hi = cache.boundaries()[idx + 1];
                bool empty = false;
                const ScoreValue pre = cache.prefix(idx, empty);
                std::size_t best_pos = 0;
                double best_cost = std::numeric_limits<double>::infinity();
                for (std::size_t pos = lo + 1; pos < hi; ++pos) {
                    const double c = cache.cost_with(pre, empty, lo, hi, pos, idx + 2);
                    if (best_pos == 0 || c < best_cost) {
                        best_cost = c;
                        best_pos = pos;
                    }
                }
                if (best_pos != cache.boundaries()[idx]) {
                    cache.move(idx, best_pos);
                    moved = true;
                }
            }
            out.iterations_used = sweep + 1;
            if (!moved) {
                out.converged = true;
                break;
            }
        }
    }
    out.segmentation = Segmentation(cache.boundaries(), start.n_elements);
    out.cost = total_cost(scorer, out.segmentation);
    return out;
}

SplitResult split(SplitterKind kind, const Scorer& scorer, std::size_t k, std::size_t max_iters) {
    switch (kind) {
        case SplitterKind::greedy: return greedy_split(scorer, k);
        case SplitterKind::dp: return dp_split(scorer, k);
        case SplitterKind::refine: return refine(scorer, greedy_split(scorer, k).segmentation, max_iters);
    }
    throw std::invalid_argument("unknown splitter kind");
}

}  // namespace textseg
