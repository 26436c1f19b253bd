#include "textseg/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "textseg/embeddings.hpp"
#include "textseg/error.hpp"

namespace textseg {

std::string_view to_string(ScorerKind kind) {
    switch (kind) {
        case ScorerKind::c99: return "c99";
        case ScorerKind::euclidean: return "euclidean";
        case ScorerKind::cvs: return "cvs";
    }
    return "cvs";
}

ScorerKind scorer_kind_from_string(std::string_view name) {
    if (name == "c99") return ScorerKind::c99;
    if (name == "euclidean") return ScorerKind::euclidean;
    if (name == "cvs") return ScorerKind::cvs;
    throw std::invalid_argument("unknown scorer '" + std::string(name) + "'");
}

ScoreValue Scorer::segment_score(std::size_t i, std::size_t j) const {
    if (!(i < j && j <= n_))
        throw std::out_of_range("segment [" + std::to_string(i) + ", " + std::to_string(j) + ") outside 0.." +
                                std::to_string(n_));
    return score_unchecked(i, j);
}

ScoreValue Scorer::aggregate(const ScoreValue& a, const ScoreValue& b) const {
    return {a.beta + b.beta, a.alpha + b.alpha, a.is_pair};
}

ScoreValue aggregate_segments(const Scorer& scorer, std::span<const std::size_t> boundaries) {
    ScoreValue acc = scorer.segment_score(0, boundaries.front());
    for (std::size_t k = 1; k < boundaries.size(); ++k)
        acc = scorer.aggregate(acc, scorer.segment_score(boundaries[k - 1], boundaries[k]));
    return acc;
}

double total_cost(const Scorer& scorer, const Segmentation& seg) {
    seg.validate();
    if (seg.n_elements != scorer.size())
        throw std::invalid_argument("segmentation covers " + std::to_string(seg.n_elements) +
                                    " elements, scorer has " + std::to_string(scorer.size()));
    return scorer.key(aggregate_segments(scorer, seg.boundaries));
}

SummedAreaTable::SummedAreaTable(const Matrix& m) : cols_(m.cols() + 1), table_((m.rows() + 1) * (m.cols() + 1), 0.0) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        double row_sum = 0.0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row_sum += m(r, c);
            table_[(r + 1) * cols_ + c + 1] = table_[r * cols_ + c + 1] + row_sum;
        }
    }
}

double SummedAreaTable::sum(std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) const {
    return table_[r1 * cols_ + c1] - table_[r0 * cols_ + c1] - table_[r1 * cols_ + c0] + table_[r0 * cols_ + c0];
}

VectorPrefix::VectorPrefix(const Matrix& v)
    : rows_(v.rows()), dim_(v.cols()), sums_((v.rows() + 1) * v.cols(), 0.0), sq_(v.rows() + 1, 0.0) {
    for (std::size_t r = 0; r < rows_; ++r) {
        auto row = v.row(r);
        for (std::size_t d = 0; d < dim_; ++d) sums_[(r + 1) * dim_ + d] = sums_[r * dim_ + d] + row[d];
        sq_[r + 1] = sq_[r] + dot(row, row);
    }
}

void VectorPrefix::range_sum(std::size_t i, std::size_t j, std::span<double> out) const {
    const double* a = sums_.data() + i * dim_;
    const double* b = sums_.data() + j * dim_;
    for (std::size_t d = 0; d < dim_; ++d) out[d] = b[d] - a[d];
}

Matrix cosine_matrix(const ElementMatrix& v) {
    const std::size_t n = v.rows();
    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i) {
        norms[i] = norm(v.row(i));
        if (norms[i] == 0.0) throw DataError("element " + std::to_string(i) + " has an all-zero representation");
    }
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double c = dot(v.row(i), v.row(j)) / (norms[i] * norms[j]);
            a(i, j) = c;
            a(j, i) = c;
        }
    }
    return a;
}

Matrix rank_transform(const Matrix& a, int r, RankMode mode) {
    if (r < 3 || r % 2 == 0) throw std::invalid_argument("rank kernel must be odd and >= 3, got " + std::to_string(r));
    if (a.rows() != a.cols()) throw std::invalid_argument("rank transform needs a square matrix");
    const auto n = static_cast<std::ptrdiff_t>(a.rows());
    const std::ptrdiff_t half = r / 2;
    Matrix out(a.rows(), a.cols());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const std::ptrdiff_t l0 = std::max<std::ptrdiff_t>(0, i - half), l1 = std::min(n - 1, i + half);
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            const std::ptrdiff_t m0 = std::max<std::ptrdiff_t>(0, j - half), m1 = std::min(n - 1, j + half);
            const double centre = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            std::size_t smaller = 0;
            for (std::ptrdiff_t l = l0; l <= l1; ++l) {
                if (mode == RankMode::literal && l == i) continue;
                for (std::ptrdiff_t m = m0; m <= m1; ++m) {
                    if (l == i && m == j) continue;
                    if (mode == RankMode::literal && m == j) continue;
                    if (centre > a(static_cast<std::size_t>(l), static_cast<std::size_t>(m))) ++smaller;
                }
            }
            const auto neighbours = static_cast<std::size_t>((l1 - l0 + 1) * (m1 - m0 + 1) - 1);
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                neighbours == 0 ? 0.0 : static_cast<double>(smaller) / static_cast<double>(neighbours);
        }
    }
    return out;
}

C99Scorer::C99Scorer(FromRank, Matrix ranked) : Scorer(ranked.rows()), rank_(std::move(ranked)), area_(rank_) {}

C99Scorer::C99Scorer(const ElementMatrix& v, const C99Options& opts)
    : C99Scorer(FromRank{}, opts.use_rank ? rank_transform(cosine_matrix(v), opts.rank_kernel, opts.rank_mode) : cosine_matrix(v)) {}

C99Scorer C99Scorer::from_rank_matrix(Matrix ranked) {
    if (ranked.rows() != ranked.cols()) throw std::invalid_argument("rank matrix must be square");
    return C99Scorer(FromRank{}, std::move(ranked));
}

ScoreValue C99Scorer::score_unchecked(std::size_t i, std::size_t j) const {
    const double len = static_cast<double>(j - i);
    return ScoreValue::pair(area_.sum(i, i, j, j), len * len);
}

double C99Scorer::key(const ScoreValue& v) const { return -v.beta / v.alpha; }

EuclideanScorer::EuclideanScorer(const ElementMatrix& v) : Scorer(v.rows()), prefix_(v) {}

ScoreValue EuclideanScorer::score_unchecked(std::size_t i, std::size_t j) const {
    if (j - i == 1) return ScoreValue::scalar(0.0);
    const std::size_t dim = prefix_.dim();
    auto pi = prefix_.prefix(i);
    auto pj = prefix_.prefix(j);
    double sum_sq = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
        const double s = pj[d] - pi[d];
        sum_sq += s * s;
    }
    const double value = prefix_.range_sq(i, j) - sum_sq / static_cast<double>(j - i);
    return ScoreValue::scalar(std::max(0.0, value));
}

CvsScorer::CvsScorer(const ElementMatrix& v)
    : Scorer(v.rows()), prefix_(v), scale_(v.cols() ? 1.0 / std::sqrt(static_cast<double>(v.cols())) : 0.0) {}

ScoreValue CvsScorer::score_unchecked(std::size_t i, std::size_t j) const {
    auto pi = prefix_.prefix(i);
    auto pj = prefix_.prefix(j);
    double l1 = 0.0;
    for (std::size_t d = 0; d < prefix_.dim(); ++d) l1 += std::abs(pj[d] - pi[d]);
    return ScoreValue::scalar(-scale_ * l1);
}

ContentVector content_vector(const ElementMatrix& v, std::size_t i, std::size_t j) {
    if (!(i < j && j <= v.rows())) throw std::out_of_range("content_vector: bad segment range");
    const std::size_t dim = v.cols();
    const double c = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<double> sum(dim, 0.0);
    for (std::size_t l = i; l < j; ++l)
        for (std::size_t d = 0; d < dim; ++d) sum[d] += v(l, d);
    ContentVector out;
    out.components.resize(dim);
    for (std::size_t d = 0; d < dim; ++d) out.components[d] = sum[d] < 0.0 ? -c : c;
    return out;
}

std::unique_ptr<Scorer> make_scorer(ScorerKind kind, const ElementMatrix& v, const C99Options& c99) {
    switch (kind) {
        case ScorerKind::c99: return std::make_unique<C99Scorer>(v, c99);
        case ScorerKind::euclidean: return std::make_unique<EuclideanScorer>(v);
        case ScorerKind::cvs: return std::make_unique<CvsScorer>(v);
    }
    throw std::invalid_argument("unknown scorer kind");
}

}  // namespace textseg
