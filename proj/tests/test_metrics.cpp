#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "textseg/metrics.hpp"

using namespace textseg;

namespace {

Segmentation random_seg(Rng& rng, std::size_t n) {
    const auto k = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(n)));
    return oracle::random_segmentation(rng, n, k);
}

}  // namespace

TEST(DefaultK, Examples) {
    EXPECT_EQ(default_k(Segmentation({5, 10}, 10)), 2u);
    EXPECT_EQ(default_k(Segmentation::from_lengths(std::vector<std::size_t>(10, 10))), 4u);
    EXPECT_EQ(default_k(Segmentation({1, 2, 3, 4}, 4)), 1u);
    EXPECT_EQ(default_k(Segmentation({7}, 7)), 3u);
}

TEST(Pk, HandEnumeratedExample) {
    // Probes (i, i+2), i = 1..8: the reference splits probes 3 and 4, the
    // hypothesis probes 1 and 2.
    EXPECT_DOUBLE_EQ(pk(Segmentation({5, 10}, 10), Segmentation({3, 10}, 10), 2), 0.5);
}

TEST(WindowDiff, HandEnumeratedExample) {
    // Windows (i, i+2]: 5 falls in windows 3 and 4, 4 falls in windows 2 and 3.
    EXPECT_DOUBLE_EQ(window_diff(Segmentation({5, 10}, 10), Segmentation({4, 10}, 10), 2), 0.25);
}

TEST(WindowDiff, ExtraBoundaryAtLeastPk) {
    const Segmentation ref({5, 10}, 10), hyp({2, 5, 10}, 10);
    for (std::size_t k = 1; k < 10; ++k) EXPECT_GE(window_diff(ref, hyp, k), pk(ref, hyp, k));
    const Segmentation close({4, 5, 10}, 10);
    EXPECT_GT(window_diff(ref, close, 3), pk(ref, close, 3));
}

TEST(Metrics, Errors) {
    const Segmentation a({5, 10}, 10), b({3, 9}, 9);
    EXPECT_THROW(pk(a, b), std::invalid_argument);
    EXPECT_THROW(window_diff(a, b), std::invalid_argument);
    EXPECT_THROW(pk(a, a, 10), std::invalid_argument);
    EXPECT_THROW(pk(a, a, 0), std::invalid_argument);
    EXPECT_THROW(pk(a, Segmentation({5, 5, 10}, 10)), std::invalid_argument);
    EXPECT_NO_THROW(pk(a, a, 9));
}

TEST(Metrics, EvaluateReport) {
    const auto r = evaluate(Segmentation({5, 10}, 10), Segmentation({3, 10}, 10));
    EXPECT_EQ(r.k_used, 2u);
    EXPECT_EQ(r.n_probes, 8u);
    EXPECT_DOUBLE_EQ(r.pk, 0.5);
}

TEST(MetricsProperty, MatchBruteForce) {
    Rng rng(51);
    for (int trial = 0; trial < 500; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform_int(2, 50));
        const auto ref = random_seg(rng, n), hyp = random_seg(rng, n);
        const std::size_t k = rng.below(2) ? default_k(ref) : 1 + rng.below(n - 1);
        if (k >= n) continue;
        EXPECT_EQ(pk(ref, hyp, k), oracle::pk(ref, hyp, k));
        EXPECT_EQ(window_diff(ref, hyp, k), oracle::window_diff(ref, hyp, k));
        EXPECT_GE(pk(ref, hyp, k), 0.0);
        EXPECT_LE(window_diff(ref, hyp, k), 1.0);
        EXPECT_EQ(pk(ref, ref, k), 0.0);
        EXPECT_EQ(window_diff(hyp, hyp, k), 0.0);
    }
}

TEST(MetricsProperty, OneBoundaryMoveBound) {
    Rng rng(52);
    int checked = 0;
    while (checked < 300) {
        const auto n = static_cast<std::size_t>(rng.uniform_int(4, 60));
        const auto ref = oracle::random_segmentation(rng, n, static_cast<std::size_t>(rng.uniform_int(2, static_cast<std::int64_t>(n) / 2)));
        const std::size_t which = rng.below(ref.num_segments() - 1);
        auto moved = ref;
        const std::size_t b = ref.boundaries[which];
        const std::size_t target = rng.below(2) ? b - 1 : b + 1;
        moved.boundaries[which] = target;
        if (!moved.valid()) continue;
        const std::size_t k = default_k(ref);
        if (k >= n) continue;
        EXPECT_LE(pk(ref, moved, k), 2.0 * static_cast<double>(k) / static_cast<double>(n - k) + 1e-12);
        ++checked;
    }
}
