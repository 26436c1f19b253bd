#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>

#include "cli/config.hpp"
#include "textseg/embeddings.hpp"
#include "textseg/segmentation.hpp"
#include "textseg/splitters.hpp"
#include "textseg/text_prep.hpp"

namespace textseg::cli {

/// Tables shared read-only by every document of a run.
struct Resources {
    std::optional<EmbeddingTable> table;
    std::optional<IdfTable> idf;
    std::optional<TopicClustering> topics;
    StopwordSet stopwords;
};

StopwordSet load_stopword_set(const RunConfig& cfg);

/// Loads embeddings (restricted to `vocabulary` when given), the idf table
/// and the topic clustering the configuration asks for.
void load_tables(const RunConfig& cfg, const std::unordered_set<std::string>* vocabulary, Resources& res);

std::unordered_set<std::string> vocabulary(std::span<const TokenizedDocument> docs);

/// Sentence elements read verbatim from reference files are lowercased and
/// split with word_tokens; word and character elements are only lowercased.
TokenizedDocument normalize_tokens(TokenizedDocument doc);

PreprocessOptions preprocess_options(const RunConfig& cfg, const Resources& res);

/// normalize_tokens followed by preprocess.
TokenizedDocument prepare(const TokenizedDocument& doc, const RunConfig& cfg, const Resources& res);

ElementMatrix represent(const TokenizedDocument& prepared, const RunConfig& cfg, const Resources& res,
                        RepresentationStats* stats = nullptr);

/// Boundaries found on the kept elements, renumbered against the document as
/// it was before preprocessing.
Segmentation to_original(const Segmentation& kept, const TokenizedDocument& prepared);

struct StageTimes {
    double prepare_ms = 0.0;
    double precompute_ms = 0.0;
    double split_ms = 0.0;
};

struct DocumentResult {
    TokenizedDocument prepared;
    SplitResult split;
    Segmentation hypothesis;
    RepresentationStats stats;
    std::size_t k_used = 0;
    StageTimes times;

    /// Second splitter run on the same scorer, when requested.
    std::optional<SplitResult> compare;
    std::optional<Segmentation> compare_hypothesis;
    double compare_ms = 0.0;
};

/// Segments `doc` into `k` segments (fewer, with a warning, if preprocessing
/// leaves fewer elements) with the configured representation, scorer and
/// splitter. `compare` runs a second splitter on the same scorer.
DocumentResult segment_document(const TokenizedDocument& doc, std::size_t k, const RunConfig& cfg,
                                const Resources& res, std::optional<SplitterKind> compare = std::nullopt);

}  // namespace textseg::cli
