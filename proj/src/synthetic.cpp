#include "textseg/synthetic.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include "textseg/error.hpp"
#include "textseg/random.hpp"

namespace textseg {
namespace {

std::vector<double> random_unit(Rng& rng, std::size_t dim) {
    std::vector<double> v(dim);
    for (auto& x : v) x = rng.normal();
    return normalized(v);
}

std::string topic_word(std::size_t t, std::size_t w) { return "t" + std::to_string(t) + "w" + std::to_string(w); }
std::string common_word(std::size_t c) { return "c" + std::to_string(c); }

}  // namespace

SyntheticCorpus make_synthetic_corpus(const SyntheticCorpusSpec& spec) {
    if (spec.topics == 0 || spec.words_per_topic == 0 || spec.dim == 0)
        throw std::invalid_argument("synthetic corpus needs topics, topic words and a dimension");
    if (spec.min_sentence_tokens == 0 || spec.min_sentence_tokens > spec.max_sentence_tokens)
        throw std::invalid_argument("bad sentence length range");
    Rng rng(spec.seed);
    SyntheticCorpus out;
    out.embeddings = EmbeddingTable(spec.dim);
    const double spread = spec.noise / std::sqrt(static_cast<double>(spec.dim));
    for (std::size_t t = 0; t < spec.topics; ++t) {
        const auto dir = random_unit(rng, spec.dim);
        for (std::size_t w = 0; w < spec.words_per_topic; ++w) {
            std::vector<double> v(dir);
            for (auto& x : v) x += spread * rng.normal();
            out.embeddings.set(topic_word(t, w), v);
        }
    }
    for (std::size_t c = 0; c < spec.common_words; ++c) out.embeddings.set(common_word(c), random_unit(rng, spec.dim));

    for (std::size_t d = 0; d < spec.documents; ++d) {
        const std::size_t topic = rng.below(spec.topics);
        std::vector<TokenList> sentences;
        for (std::size_t s = 0; s < spec.sentences_per_document; ++s) {
            const auto len = static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(spec.min_sentence_tokens),
                                                                       static_cast<std::int64_t>(spec.max_sentence_tokens)));
            TokenList tokens;
            for (std::size_t i = 0; i < len; ++i) {
                if (spec.common_words == 0 || rng.uniform01() < spec.topic_share)
                    tokens.push_back(topic_word(topic, rng.below(spec.words_per_topic)));
                else
                    tokens.push_back(common_word(rng.below(spec.common_words)));
            }
            sentences.push_back(std::move(tokens));
        }
        out.documents.push_back(make_document("doc" + std::to_string(d), Level::sentence, std::move(sentences)));
        out.document_topic.push_back(topic);
    }
    return out;
}

void write_synthetic_corpus(const SyntheticCorpus& corpus, const std::filesystem::path& dir,
                            const std::filesystem::path& embeddings_path) {
    std::filesystem::create_directories(dir);
    for (const auto& d : corpus.documents) {
        std::ofstream out(dir / (d.id + ".txt"), std::ios::binary);
        if (!out) throw DataError("cannot write into " + dir.string());
        for (const auto& el : d.elements) {
            for (std::size_t i = 0; i < el.size(); ++i) out << (i ? " " : "") << el[i];
            out << '\n';
        }
    }
    std::ofstream out(embeddings_path, std::ios::binary);
    if (!out) throw DataError("cannot write " + embeddings_path.string());
    write_embeddings(out, corpus.embeddings);
}

}  // namespace textseg
