#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "textseg/matrix.hpp"
#include "textseg/segmentation.hpp"

namespace textseg {

enum class ScorerKind { c99, euclidean, cvs };

std::string_view to_string(ScorerKind kind);
ScorerKind scorer_kind_from_string(std::string_view name);

/// Score of a segment or of an aggregate of segments: a scalar, or the
/// (beta, alpha) pair of the ranked-similarity objective.
struct ScoreValue {
    double beta = 0.0;
    double alpha = 0.0;
    bool is_pair = false;

    static ScoreValue scalar(double value) { return {value, 0.0, false}; }
    static ScoreValue pair(double beta, double alpha) { return {beta, alpha, true}; }
    double value() const { return beta; }

    bool operator==(const ScoreValue&) const = default;
};

/// A segment score sigma(i, j) over elements [i, j), an associative
/// aggregation of segment scores, and a key mapping an aggregate to a cost.
/// Lower keys are better for every scorer.
///
/// Implementations precompute everything in the constructor; the query
/// methods are const and safe to call from several threads.
class Scorer {
public:
    virtual ~Scorer() = default;

    virtual ScorerKind kind() const = 0;
    std::size_t size() const { return n_; }

    /// Requires 0 <= i < j <= size(); throws std::out_of_range otherwise.
    ScoreValue segment_score(std::size_t i, std::size_t j) const;

    /// Component-wise addition for all built-in scorers.
    virtual ScoreValue aggregate(const ScoreValue& a, const ScoreValue& b) const;
    virtual double key(const ScoreValue& v) const = 0;

    /// True when aggregation is plain addition and the key is the identity,
    /// which is what makes dynamic programming exact.
    virtual bool additive_scalar() const = 0;

protected:
    explicit Scorer(std::size_t n) : n_(n) {}
    virtual ScoreValue score_unchecked(std::size_t i, std::size_t j) const = 0;

private:
    std::size_t n_;
};

/// Cost of a segmentation: key(sigma(0, s_1) (+) ... (+) sigma(s_{K-1}, s_K)),
/// folded left to right. Throws std::invalid_argument for an invalid
/// segmentation or one whose N differs from the scorer's.
double total_cost(const Scorer& scorer, const Segmentation& seg);

/// Same fold over explicit boundaries, without validation.
ScoreValue aggregate_segments(const Scorer& scorer, std::span<const std::size_t> boundaries);

/// Inclusive 2-D prefix sums: sum over rows [r0, r1) and columns [c0, c1)
/// in O(1).
class SummedAreaTable {
public:
    SummedAreaTable() = default;
    explicit SummedAreaTable(const Matrix& m);
    double sum(std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) const;

private:
    std::size_t cols_ = 0;
    std::vector<double> table_;
};

/// Row prefix sums P(j) = sum of rows [0, j) and of their squared norms.
class VectorPrefix {
public:
    VectorPrefix() = default;
    explicit VectorPrefix(const Matrix& v);

    std::size_t rows() const { return rows_; }
    std::size_t dim() const { return dim_; }
    /// P(j) - P(i) written into `out`.
    void range_sum(std::size_t i, std::size_t j, std::span<double> out) const;
    double range_sq(std::size_t i, std::size_t j) const { return sq_[j] - sq_[i]; }
    std::span<const double> prefix(std::size_t j) const { return {sums_.data() + j * dim_, dim_}; }

private:
    std::size_t rows_ = 0;
    std::size_t dim_ = 0;
    std::vector<double> sums_;
    std::vector<double> sq_;
};

/// Pairwise cosine similarities of the rows. Throws DataError naming the
/// first all-zero row.
Matrix cosine_matrix(const ElementMatrix& v);

enum class RankMode {
    /// Compare against every in-bounds cell of the r x r block except the
    /// centre; normalize by the number of cells compared.
    corrected,
    /// Skip the centre's whole row and column inside the block but still
    /// normalize by the in-bounds block size minus one.
    literal,
};

/// Each entry becomes the fraction of its block neighbours that are strictly
/// smaller. r must be odd and at least 3.
Matrix rank_transform(const Matrix& a, int r, RankMode mode = RankMode::corrected);

struct C99Options {
    int rank_kernel = 11;
    bool use_rank = true;
    RankMode rank_mode = RankMode::corrected;
};

/// sigma(i, j) = (sum of R over the block [i, j) x [i, j), (j - i)^2),
/// aggregated by component-wise addition, key = -beta / alpha.
class C99Scorer final : public Scorer {
public:
    C99Scorer(const ElementMatrix& v, const C99Options& opts = {});
    /// Uses `ranked` directly as the matrix R.
    static C99Scorer from_rank_matrix(Matrix ranked);

    ScorerKind kind() const override { return ScorerKind::c99; }
    double key(const ScoreValue& v) const override;
    bool additive_scalar() const override { return false; }

    const Matrix& rank_matrix() const { return rank_; }

protected:
    ScoreValue score_unchecked(std::size_t i, std::size_t j) const override;

private:
    struct FromRank {};
    C99Scorer(FromRank, Matrix ranked);
    Matrix rank_;
    SummedAreaTable area_;
};

/// Sum of squared deviations of the rows in [i, j) from their mean.
class EuclideanScorer final : public Scorer {
public:
    explicit EuclideanScorer(const ElementMatrix& v);

    ScorerKind kind() const override { return ScorerKind::euclidean; }
    double key(const ScoreValue& v) const override { return v.beta; }
    bool additive_scalar() const override { return true; }

protected:
    ScoreValue score_unchecked(std::size_t i, std::size_t j) const override;

private:
    VectorPrefix prefix_;
};

/// Negated content-vector likelihood: -(1/sqrt(D)) * sum_k |P_k(j) - P_k(i)|,
/// i.e. minus the dot product of the segment's summed vector with its
/// maximum-likelihood content vector.
class CvsScorer final : public Scorer {
public:
    explicit CvsScorer(const ElementMatrix& v);

    ScorerKind kind() const override { return ScorerKind::cvs; }
    double key(const ScoreValue& v) const override { return v.beta; }
    bool additive_scalar() const override { return true; }

protected:
    ScoreValue score_unchecked(std::size_t i, std::size_t j) const override;

private:
    VectorPrefix prefix_;
    double scale_ = 0.0;
};

/// Maximum-likelihood content vector of rows [i, j): component k is
/// +-1/sqrt(D) following the sign of the summed component (zero counts as +).
struct ContentVector {
    std::vector<double> components;
};

ContentVector content_vector(const ElementMatrix& v, std::size_t i, std::size_t j);

std::unique_ptr<Scorer> make_scorer(ScorerKind kind, const ElementMatrix& v, const C99Options& c99 = {});

}  // namespace textseg
