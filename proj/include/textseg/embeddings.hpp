#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "textseg/matrix.hpp"
#include "textseg/text_prep.hpp"

namespace textseg {

/// Word vectors of a fixed dimension, held in one contiguous buffer.
class EmbeddingTable {
public:
    EmbeddingTable() = default;
    explicit EmbeddingTable(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }

    /// Inserts or replaces. Returns false when the word was already present.
    bool set(std::string word, std::span<const double> vec);

    bool contains(std::string_view word) const;
    std::optional<std::span<const double>> find(std::string_view word) const;

    /// Words in insertion order.
    const std::vector<std::string>& words() const { return words_; }
    std::span<const double> vector(std::size_t index) const { return {data_.data() + index * dim_, dim_}; }

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
    };
    std::size_t dim_ = 0;
    std::vector<std::string> words_;
    std::vector<double> data_;
    std::unordered_map<std::string, std::size_t, Hash, std::equal_to<>> index_;
};

/// Reads "word c1 c2 ... cD" lines. The dimension comes from the first line.
/// When `vocabulary` is given, only those words are kept (all lines are
/// still checked for a consistent dimension). Duplicate words: last wins,
/// with a warning.
EmbeddingTable parse_embeddings(std::istream& in, const std::string& source = "<input>",
                                const std::unordered_set<std::string>* vocabulary = nullptr);
EmbeddingTable load_embeddings(const std::filesystem::path& path,
                               const std::unordered_set<std::string>* vocabulary = nullptr);
void write_embeddings(std::ostream& out, const EmbeddingTable& table);

/// Document frequencies over a reference corpus.
struct IdfTable {
    std::size_t num_documents = 0;
    std::unordered_map<std::string, std::size_t> df;

    /// log(num_documents / df). Words never seen in the corpus are treated as
    /// having df = 1, the rarest possible.
    double idf(std::string_view word) const;
};

IdfTable compute_idf(std::span<const TokenizedDocument> corpus);

/// "#documents N" header, then "word df" per line, sorted by word.
void write_idf(std::ostream& out, const IdfTable& table);
IdfTable parse_idf(std::istream& in, const std::string& source = "<input>");
IdfTable load_idf(const std::filesystem::path& path);

enum class Weighting { tf, tfidf };
enum class OovPolicy { skip, error };

struct RepresentationConfig {
    Weighting weighting = Weighting::tf;
    bool normalize_word_vectors = false;
    bool normalize_element_vectors = false;
    OovPolicy oov_policy = OovPolicy::skip;
};

/// Sum over tokens of weight(w) * v(w), with v optionally unit-normalized and
/// the result optionally normalized. Repeated tokens contribute once per
/// occurrence.
///
/// Throws DataError when no token is in the table, when an OOV token is met
/// under OovPolicy::error, or when element normalization meets a zero vector.
std::vector<double> element_vector(std::span<const std::string> tokens, const EmbeddingTable& table,
                                   const IdfTable* idf, const RepresentationConfig& cfg);

struct RepresentationStats {
    std::size_t oov_tokens = 0;
    std::size_t zero_rows = 0;
};

/// Row i is element_vector(element i), except that a zero row under element
/// normalization is kept as zeros with a warning instead of failing.
ElementMatrix build_element_matrix(const TokenizedDocument& doc, const EmbeddingTable& table,
                                   const IdfTable* idf, const RepresentationConfig& cfg,
                                   RepresentationStats* stats = nullptr);

/// Term-frequency rows over the document's own vocabulary (sorted), the
/// classic bag-of-words representation.
ElementMatrix bag_of_words_matrix(const TokenizedDocument& doc);

struct TopicClustering {
    std::size_t k = 0;
    Matrix centroids;
    std::unordered_map<std::string, std::size_t> assignment;
    std::size_t iterations = 0;
    bool converged = false;
    /// Sum of cosine similarities to the assigned centroid, after each iteration.
    std::vector<double> objective_trace;
};

/// Spherical k-means on the unit-normalized vectors of `table`.
///
/// Seeds are k distinct words drawn with the portable generator; ties in
/// assignment go to the lowest cluster id; an empty cluster keeps its
/// previous centroid. Zero vectors are left unassigned.
TopicClustering spherical_kmeans(const EmbeddingTable& table, std::size_t k, std::uint64_t seed,
                                 std::size_t max_iters = 100);

/// Counts of tokens per cluster; tokens without a cluster are skipped.
std::vector<double> topic_histogram(std::span<const std::string> tokens, const TopicClustering& clustering);

ElementMatrix topic_histogram_matrix(const TokenizedDocument& doc, const TopicClustering& clustering);

std::vector<double> normalized(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> v);

}  // namespace textseg
