#include "textseg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace textseg {
namespace {

// counts[p] = number of boundaries s < N with s <= p, for p in [0, N].
std::vector<std::size_t> cumulative_boundaries(const Segmentation& seg) {
    std::vector<std::size_t> counts(seg.n_elements + 1, 0);
    for (std::size_t s : seg.boundaries)
        if (s < seg.n_elements) ++counts[s];
    for (std::size_t p = 1; p < counts.size(); ++p) counts[p] += counts[p - 1];
    return counts;
}

std::size_t check_pair(const Segmentation& ref, const Segmentation& hyp, std::optional<std::size_t> k) {
    ref.validate();
    hyp.validate();
    if (ref.n_elements != hyp.n_elements)
        throw std::invalid_argument("reference has " + std::to_string(ref.n_elements) + " elements, hypothesis has " +
                                    std::to_string(hyp.n_elements));
    const std::size_t kk = k.value_or(default_k(ref));
    if (kk < 1) throw std::invalid_argument("probe distance k must be positive");
    if (kk >= ref.n_elements)
        throw std::invalid_argument("probe distance k = " + std::to_string(kk) + " leaves no probes for N = " +
                                    std::to_string(ref.n_elements));
    return kk;
}

}  // namespace

std::size_t default_k(const Segmentation& ref) {
    const double half = static_cast<double>(ref.n_elements) / (2.0 * static_cast<double>(ref.num_segments()));
    const long rounded = std::lround(half);
    return static_cast<std::size_t>(std::max(1L, rounded - 1));
}

std::size_t boundaries_between(const Segmentation& seg, std::size_t i, std::size_t j) {
    return static_cast<std::size_t>(std::count_if(seg.boundaries.begin(), seg.boundaries.end(), [&](std::size_t s) {
        return i < s && s <= j && s < seg.n_elements;
    }));
}

EvalReport evaluate(const Segmentation& ref, const Segmentation& hyp, std::optional<std::size_t> k) {
    const std::size_t kk = check_pair(ref, hyp, k);
    const std::size_t n = ref.n_elements;
    const auto cr = cumulative_boundaries(ref);
    const auto ch = cumulative_boundaries(hyp);
    std::size_t pk_miss = 0, wd_miss = 0;
    for (std::size_t i = 1; i + kk <= n; ++i) {
        const std::size_t br = cr[i + kk] - cr[i];
        const std::size_t bh = ch[i + kk] - ch[i];
        if ((br == 0) != (bh == 0)) ++pk_miss;
        if (br != bh) ++wd_miss;
    }
    EvalReport r;
    r.k_used = kk;
    r.n_probes = n - kk;
    r.pk = static_cast<double>(pk_miss) / static_cast<double>(r.n_probes);
    r.wd = static_cast<double>(wd_miss) / static_cast<double>(r.n_probes);
    return r;
}

double pk(const Segmentation& ref, const Segmentation& hyp, std::optional<std::size_t> k) {
    return evaluate(ref, hyp, k).pk;
}

double window_diff(const Segmentation& ref, const Segmentation& hyp, std::optional<std::size_t> k) {
    return evaluate(ref, hyp, k).wd;
}

}  // namespace textseg
