#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "textseg/embeddings.hpp"
#include "textseg/text_prep.hpp"

namespace textseg {

/// Toy corpus with a matching embedding table, for demos and tests when no
/// real corpus or pre-trained vectors are around.
///
/// Every topic has its own words whose vectors scatter around a random unit
/// direction; common words have unrelated random directions. Each document
/// draws one topic and fills its sentences with a mix of topic and common
/// words.
struct SyntheticCorpusSpec {
    std::size_t topics = 40;
    std::size_t words_per_topic = 30;
    std::size_t common_words = 80;
    std::size_t dim = 50;
    std::size_t documents = 124;
    std::size_t sentences_per_document = 14;
    std::size_t min_sentence_tokens = 6;
    std::size_t max_sentence_tokens = 14;
    /// Probability that a token is a topic word rather than a common word.
    double topic_share = 0.3;
    /// Spread of topic word vectors around their topic direction.
    double noise = 1.5;
    std::uint64_t seed = 7;
};

struct SyntheticCorpus {
    std::vector<TokenizedDocument> documents;
    std::vector<std::size_t> document_topic;
    EmbeddingTable embeddings;
};

SyntheticCorpus make_synthetic_corpus(const SyntheticCorpusSpec& spec);

/// One file per document (one sentence per line) under `dir`, plus the
/// vectors in `embeddings_path`.
void write_synthetic_corpus(const SyntheticCorpus& corpus, const std::filesystem::path& dir,
                            const std::filesystem::path& embeddings_path);

}  // namespace textseg
