#include <gtest/gtest.h>

#include <limits>

#include "support/oracles.hpp"
#include "textseg/embeddings.hpp"
#include "textseg/scoring.hpp"
#include "textseg/splitters.hpp"
#include "textseg/text_prep.hpp"

using namespace textseg;

namespace {

std::unique_ptr<Scorer> letters_scorer(ScorerKind kind) {
    const auto doc = tokenize_chars({"demo", "aaabbcccdd"});
    return make_scorer(kind, bag_of_words_matrix(doc));
}

double brute_best(const Scorer& s, std::size_t k) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& seg : oracle::all_segmentations(s.size(), k)) best = std::min(best, total_cost(s, seg));
    return best;
}

}  // namespace

TEST(Splitters, LetterDemo) {
    const auto s = letters_scorer(ScorerKind::euclidean);
    const Segmentation expected({3, 5, 8, 10}, 10);
    EXPECT_EQ(greedy_split(*s, 4).segmentation, expected);
    EXPECT_EQ(dp_split(*s, 4).segmentation, expected);
    EXPECT_EQ(split(SplitterKind::refine, *s, 4).segmentation, expected);
    EXPECT_EQ(dp_split(*s, 4).cost, 0.0);
}

TEST(Splitters, SingleSegmentAndBounds) {
    Rng rng(5);
    const EuclideanScorer s(oracle::random_matrix(rng, 6, 3));
    for (auto kind : {SplitterKind::greedy, SplitterKind::dp, SplitterKind::refine}) {
        EXPECT_EQ(split(kind, s, 1).segmentation, Segmentation::whole(6));
        EXPECT_EQ(split(kind, s, 6).segmentation, Segmentation({1, 2, 3, 4, 5, 6}, 6));
        EXPECT_THROW(split(kind, s, 0), std::invalid_argument);
        EXPECT_THROW(split(kind, s, 7), std::invalid_argument);
    }
}

TEST(Splitters, KindNames) {
    for (auto kind : {SplitterKind::greedy, SplitterKind::dp, SplitterKind::refine})
        EXPECT_EQ(splitter_kind_from_string(to_string(kind)), kind);
    EXPECT_THROW(splitter_kind_from_string("beam"), std::invalid_argument);
}

TEST(DpSplit, MatchesExhaustiveSearch) {
    Rng rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 11));
        const std::size_t k = static_cast<std::size_t>(rng.uniform_int(1, std::min<std::int64_t>(4, n)));
        const auto v = oracle::random_matrix(rng, n, 3);
        for (auto kind : {ScorerKind::euclidean, ScorerKind::cvs}) {
            const auto s = make_scorer(kind, v);
            const auto got = dp_split(*s, k);
            EXPECT_TRUE(got.segmentation.valid());
            EXPECT_EQ(got.segmentation.num_segments(), k);
            EXPECT_NEAR(got.cost, brute_best(*s, k), 1e-9);
            EXPECT_DOUBLE_EQ(got.cost, total_cost(*s, got.segmentation));
        }
    }
}

TEST(DpSplit, LeftmostOnTies) {
    // Identical rows: every segmentation costs zero.
    const EuclideanScorer s(Matrix(6, 2, 1.0));
    EXPECT_EQ(dp_split(s, 3).segmentation, Segmentation({1, 2, 6}, 6));
    EXPECT_EQ(greedy_split(s, 3).segmentation, Segmentation({1, 2, 6}, 6));
}

TEST(SplittersProperty, OptimalAtMostRefinedAtMostGreedy) {
    Rng rng(22);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 40));
        const std::size_t k = static_cast<std::size_t>(rng.uniform_int(1, std::min<std::int64_t>(8, n)));
        const auto v = oracle::random_matrix(rng, n, 5);
        for (auto kind : {ScorerKind::euclidean, ScorerKind::cvs}) {
            const auto s = make_scorer(kind, v);
            const auto g = greedy_split(*s, k);
            const auto r = refine(*s, g.segmentation);
            const auto d = dp_split(*s, k);
            EXPECT_LE(d.cost, r.cost + 1e-9);
            EXPECT_LE(r.cost, g.cost + 1e-12);
            EXPECT_EQ(r.segmentation.num_segments(), k);
        }
    }
}

TEST(Refine, OptimumIsFixedPoint) {
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(3, 30));
        const std::size_t k = static_cast<std::size_t>(rng.uniform_int(2, std::min<std::int64_t>(6, n)));
        const CvsScorer s(oracle::random_matrix(rng, n, 4));
        const auto d = dp_split(s, k);
        const auto r = refine(s, d.segmentation);
        EXPECT_DOUBLE_EQ(r.cost, d.cost);
        EXPECT_TRUE(r.converged);
        EXPECT_EQ(r.iterations_used, 1u);
    }
}

TEST(Refine, SweepLimitAndMonotoneCost) {
    Rng rng(24);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(5, 60));
        const std::size_t k = static_cast<std::size_t>(rng.uniform_int(2, std::min<std::int64_t>(10, n)));
        const EuclideanScorer s(oracle::random_matrix(rng, n, 4));
        auto seg = oracle::random_segmentation(rng, n, k);
        double prev = total_cost(s, seg);
        for (int step = 0; step < 5; ++step) {
            const auto one = refine(s, seg, 1);
            EXPECT_LE(one.iterations_used, 1u);
            EXPECT_LE(one.cost, prev + 1e-12);
            prev = one.cost;
            seg = one.segmentation;
        }
        EXPECT_THROW(refine(s, Segmentation({n + 1}, n + 1)), std::invalid_argument);
    }
}

TEST(Splitters, Deterministic) {
    Rng rng(25);
    const auto v = oracle::random_matrix(rng, 80, 8);
    for (auto sk : {ScorerKind::c99, ScorerKind::euclidean, ScorerKind::cvs}) {
        const auto s = make_scorer(sk, v);
        for (auto kind : {SplitterKind::greedy, SplitterKind::dp, SplitterKind::refine}) {
            const auto a = split(kind, *s, 7), b = split(kind, *s, 7);
            EXPECT_EQ(a.segmentation, b.segmentation);
            EXPECT_EQ(a.cost, b.cost);
        }
    }
}

TEST(Splitters, RatioObjectiveStillProducesValidSegmentations) {
    Rng rng(26);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(4, 30));
        const std::size_t k = static_cast<std::size_t>(rng.uniform_int(1, std::min<std::int64_t>(5, n)));
        const C99Scorer s(oracle::random_matrix(rng, n, 4), {3, true, RankMode::corrected});
        const auto g = greedy_split(s, k);
        const auto r = refine(s, g.segmentation);
        EXPECT_LE(r.cost, g.cost + 1e-12);
        for (const auto& res : {g, r, dp_split(s, k)}) {
            EXPECT_TRUE(res.segmentation.valid());
            EXPECT_EQ(res.segmentation.num_segments(), k);
            EXPECT_DOUBLE_EQ(res.cost, total_cost(s, res.segmentation));
        }
    }
}
