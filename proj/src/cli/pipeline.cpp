#include "cli/pipeline.hpp"

#include <chrono>

#include "textseg/error.hpp"
#include "textseg/log.hpp"

namespace textseg::cli {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

StopwordSet load_stopword_set(const RunConfig& cfg) {
    if (!cfg.use_stopwords()) return {};
    if (cfg.stopwords_path.empty()) throw UsageError("stopword removal is on but no stopword file is set");
    return load_stopwords(cfg.stopwords_path);
}

void load_tables(const RunConfig& cfg, const std::unordered_set<std::string>* vocab, Resources& res) {
    if (cfg.needs_embeddings()) {
        res.table = load_embeddings(cfg.embeddings_path, vocab);
        if (res.table->empty()) throw DataError("no word of the input occurs in " + cfg.embeddings_path);
        log::info("loaded " + std::to_string(res.table->size()) + " vectors of dimension " +
                  std::to_string(res.table->dim()));
    }
    if (cfg.rep.weighting == Weighting::tfidf) res.idf = load_idf(cfg.idf_path);
    if (cfg.representation == Representation::topics) {
        if (cfg.topic_k > res.table->size())
            throw UsageError("--topics " + std::to_string(cfg.topic_k) + " exceeds the " +
                             std::to_string(res.table->size()) + " words available");
        res.topics = spherical_kmeans(*res.table, cfg.topic_k, cfg.seed);
        log::info("spherical k-means: " + std::to_string(res.topics->iterations) + " iterations" +
                  (res.topics->converged ? "" : " (not converged)"));
    }
}

std::unordered_set<std::string> vocabulary(std::span<const TokenizedDocument> docs) {
    std::unordered_set<std::string> out;
    for (const auto& d : docs)
        for (const auto& el : d.elements) out.insert(el.begin(), el.end());
    return out;
}

TokenizedDocument normalize_tokens(TokenizedDocument doc) {
    for (auto& el : doc.elements) {
        if (doc.level == Level::sentence) {
            std::string joined;
            for (const auto& t : el) {
                if (!joined.empty()) joined.push_back(' ');
                joined += t;
            }
            el = word_tokens(joined);
        } else {
            for (auto& t : el) t = to_lower(t);
        }
    }
    return doc;
}

PreprocessOptions preprocess_options(const RunConfig& cfg, const Resources& res) {
    PreprocessOptions opts;
    opts.remove_stopwords = cfg.use_stopwords();
    opts.stem = cfg.stem;
    opts.min_element_tokens = cfg.min_tokens();
    opts.stopwords = res.stopwords;
    return opts;
}

TokenizedDocument prepare(const TokenizedDocument& doc, const RunConfig& cfg, const Resources& res) {
    return preprocess(normalize_tokens(doc), preprocess_options(cfg, res));
}

ElementMatrix represent(const TokenizedDocument& prepared, const RunConfig& cfg, const Resources& res,
                        RepresentationStats* stats) {
    switch (cfg.representation) {
        case Representation::bag_of_words: return bag_of_words_matrix(prepared);
        case Representation::topics: return topic_histogram_matrix(prepared, *res.topics);
        case Representation::embeddings: break;
    }
    return build_element_matrix(prepared, *res.table, res.idf ? &*res.idf : nullptr, cfg.rep, stats);
}

Segmentation to_original(const Segmentation& kept, const TokenizedDocument& prepared) {
    Segmentation out;
    out.n_elements = prepared.source_element_count;
    for (std::size_t b : kept.boundaries)
        out.boundaries.push_back(b < prepared.size() ? prepared.kept_index_map[b] : out.n_elements);
    return out;
}

DocumentResult segment_document(const TokenizedDocument& doc, std::size_t k, const RunConfig& cfg,
                                const Resources& res, std::optional<SplitterKind> compare) {
    DocumentResult out;
    auto t0 = Clock::now();
    out.prepared = prepare(doc, cfg, res);
    out.times.prepare_ms = ms_since(t0);

    const std::size_t n = out.prepared.size();
    out.k_used = k;
    if (k > n) {
        log::warn(doc.id + ": " + std::to_string(n) + " elements left after preprocessing, using K = " +
                  std::to_string(n) + " instead of " + std::to_string(k));
        out.k_used = n;
    }

    t0 = Clock::now();
    const ElementMatrix v = represent(out.prepared, cfg, res, &out.stats);
    const auto scorer = make_scorer(cfg.scorer, v, cfg.c99);
    out.times.precompute_ms = ms_since(t0);

    t0 = Clock::now();
    out.split = split(cfg.splitter, *scorer, out.k_used, cfg.max_iters);
    out.times.split_ms = ms_since(t0);
    out.hypothesis = to_original(out.split.segmentation, out.prepared);

    if (compare) {
        t0 = Clock::now();
        out.compare = split(*compare, *scorer, out.k_used, cfg.max_iters);
        out.compare_ms = ms_since(t0);
        out.compare_hypothesis = to_original(out.compare->segmentation, out.prepared);
    }
    return out;
}

}  // namespace textseg::cli
