#pragma once

// Brute-force reference implementations used as test oracles. They follow
// the definitions directly and share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "textseg/matrix.hpp"
#include "textseg/random.hpp"
#include "textseg/segmentation.hpp"

namespace oracle {

using textseg::Matrix;
using textseg::Segmentation;

inline Matrix random_matrix(textseg::Rng& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.normal();
    return m;
}

/// Every segmentation of n elements into k segments, in lexicographic order
/// of the boundary list.
inline std::vector<Segmentation> all_segmentations(std::size_t n, std::size_t k) {
    std::vector<Segmentation> out;
    std::vector<std::size_t> cuts;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (cuts.size() + 1 == k) {
            auto b = cuts;
            b.push_back(n);
            out.emplace_back(std::move(b), n);
            return;
        }
        for (std::size_t c = from; c < n; ++c) {
            cuts.push_back(c);
            rec(c + 1);
            cuts.pop_back();
        }
    };
    rec(1);
    return out;
}

inline Segmentation random_segmentation(textseg::Rng& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> cuts;
    for (std::size_t c : rng.sample(n - 1, k - 1)) cuts.push_back(c + 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);
    return {cuts, n};
}

/// Segment sums in two passes: mean, then squared deviations.
inline double euclidean_direct(const Matrix& v, std::size_t i, std::size_t j) {
    std::vector<double> mean(v.cols(), 0.0);
    for (std::size_t l = i; l < j; ++l)
        for (std::size_t d = 0; d < v.cols(); ++d) mean[d] += v(l, d);
    for (auto& x : mean) x /= static_cast<double>(j - i);
    double s = 0.0;
    for (std::size_t l = i; l < j; ++l)
        for (std::size_t d = 0; d < v.cols(); ++d) s += (v(l, d) - mean[d]) * (v(l, d) - mean[d]);
    return s;
}

/// Unnegated content-vector score: the maximum over all sign vectors c in
/// {+-1/sqrt(D)}^D of sum_l V_l . c, by exhaustive search when D is small
/// and by the per-component argument otherwise.
inline double cvs_direct(const Matrix& v, std::size_t i, std::size_t j) {
    const std::size_t dim = v.cols();
    const double c = 1.0 / std::sqrt(static_cast<double>(dim));
    if (dim <= 12) {
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
            double total = 0.0;
            for (std::size_t l = i; l < j; ++l)
                for (std::size_t d = 0; d < dim; ++d) total += v(l, d) * ((mask >> d) & 1 ? c : -c);
            best = std::max(best, total);
        }
        return best;
    }
    double total = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
        double s = 0.0;
        for (std::size_t l = i; l < j; ++l) s += v(l, d);
        total += std::abs(s) * c;
    }
    return total;
}

/// Segment label of position p in 0..N: how many boundaries (other than N)
/// are <= p. Position N belongs to the last segment.
inline std::vector<std::size_t> labels(const Segmentation& s) {
    std::vector<std::size_t> out(s.n_elements + 1, 0);
    for (std::size_t p = 0; p <= s.n_elements; ++p)
        for (std::size_t b : s.boundaries)
            if (b < s.n_elements && b <= p) ++out[p];
    return out;
}

inline double pk(const Segmentation& ref, const Segmentation& hyp, std::size_t k) {
    const auto lr = labels(ref), lh = labels(hyp);
    const std::size_t n = ref.n_elements;
    std::size_t miss = 0;
    for (std::size_t i = 1; i + k <= n; ++i) miss += ((lr[i] == lr[i + k]) != (lh[i] == lh[i + k])) ? 1 : 0;
    return static_cast<double>(miss) / static_cast<double>(n - k);
}

inline std::size_t count_in_window(const Segmentation& s, std::size_t i, std::size_t j) {
    std::size_t c = 0;
    for (std::size_t b : s.boundaries)
        if (i < b && b <= j && b < s.n_elements) ++c;
    return c;
}

inline double window_diff(const Segmentation& ref, const Segmentation& hyp, std::size_t k) {
    const std::size_t n = ref.n_elements;
    std::size_t miss = 0;
    for (std::size_t i = 1; i + k <= n; ++i)
        miss += count_in_window(ref, i, i + k) != count_in_window(hyp, i, i + k) ? 1 : 0;
    return static_cast<double>(miss) / static_cast<double>(n - k);
}

/// Rank transform by explicit offsets over the r x r block: centre excluded,
/// out-of-range cells skipped, normalized by the cells compared.
inline Matrix rank_corrected(const Matrix& a, int r) {
    const int n = static_cast<int>(a.rows());
    const int h = r / 2;
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int compared = 0, smaller = 0;
            for (int di = -h; di <= h; ++di)
                for (int dj = -h; dj <= h; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    const int l = i + di, m = j + dj;
                    if (l < 0 || m < 0 || l >= n || m >= n) continue;
                    ++compared;
                    if (a(i, j) > a(l, m)) ++smaller;
                }
            out(i, j) = compared ? static_cast<double>(smaller) / compared : 0.0;
        }
    return out;
}

}  // namespace oracle
