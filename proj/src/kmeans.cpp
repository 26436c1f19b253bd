#include <cmath>
#include <stdexcept>

#include "textseg/embeddings.hpp"
#include "textseg/random.hpp"

namespace textseg {

TopicClustering spherical_kmeans(const EmbeddingTable& table, std::size_t k, std::uint64_t seed,
                                 std::size_t max_iters) {
    if (k == 0) throw std::invalid_argument("spherical k-means needs k >= 1");
    if (k > table.size())
        throw std::invalid_argument("spherical k-means: k = " + std::to_string(k) + " exceeds vocabulary size " +
                                    std::to_string(table.size()));
    const std::size_t n = table.size();
    const std::size_t dim = table.dim();

    Matrix points(n, dim);
    std::vector<bool> usable(n, false);
    for (std::size_t w = 0; w < n; ++w) {
        auto v = normalized(table.vector(w));
        std::copy(v.begin(), v.end(), points.row(w).begin());
        usable[w] = norm(table.vector(w)) > 0.0;
    }

    TopicClustering out;
    out.k = k;
    out.centroids = Matrix(k, dim);
    Rng rng(seed);
    const auto seeds = rng.sample(n, k);
    for (std::size_t c = 0; c < k; ++c) {
        auto src = points.row(seeds[c]);
        std::copy(src.begin(), src.end(), out.centroids.row(c).begin());
    }

    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(n, kNone);
    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        bool changed = false;
        double objective = 0.0;
        for (std::size_t w = 0; w < n; ++w) {
            if (!usable[w]) continue;
            std::size_t best = 0;
            double best_sim = dot(points.row(w), out.centroids.row(0));
            for (std::size_t c = 1; c < k; ++c) {
                const double sim = dot(points.row(w), out.centroids.row(c));
                if (sim > best_sim) {
                    best_sim = sim;
                    best = c;
                }
            }
            objective += best_sim;
            if (label[w] != best) {
                label[w] = best;
                changed = true;
            }
        }
        out.objective_trace.push_back(objective);
        out.iterations = iter + 1;
        if (!changed) {
            out.converged = true;
            break;
        }
        // Stop before moving the centroids so the assignment stays nearest-centroid.
        if (iter + 1 == max_iters) break;
        Matrix sums(k, dim);
        std::vector<std::size_t> counts(k, 0);
        for (std::size_t w = 0; w < n; ++w) {
            if (label[w] == kNone) continue;
            auto dst = sums.row(label[w]);
            auto src = points.row(w);
            for (std::size_t d = 0; d < dim; ++d) dst[d] += src[d];
            ++counts[label[w]];
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] == 0 || norm(sums.row(c)) == 0.0) continue;
            auto v = normalized(sums.row(c));
            std::copy(v.begin(), v.end(), out.centroids.row(c).begin());
        }
    }

    for (std::size_t w = 0; w < n; ++w)
        if (label[w] != kNone) out.assignment.emplace(table.words()[w], label[w]);
    return out;
}

}  // namespace textseg
