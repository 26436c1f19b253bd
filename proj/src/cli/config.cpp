#include "cli/config.hpp"

#include <filesystem>

#include "textseg/error.hpp"

namespace textseg::cli {

std::string_view to_string(Representation r) {
    switch (r) {
        case Representation::embeddings: return "embeddings";
        case Representation::bag_of_words: return "bow";
        case Representation::topics: return "topics";
    }
    return "embeddings";
}

Representation representation_from_string(std::string_view name) {
    if (name == "embeddings") return Representation::embeddings;
    if (name == "bow") return Representation::bag_of_words;
    if (name == "topics") return Representation::topics;
    throw UsageError("unknown representation '" + std::string(name) + "' (expected embeddings, bow or topics)");
}

bool RunConfig::use_stopwords() const {
    return remove_stopwords.value_or(level == Level::sentence);
}

std::size_t RunConfig::min_tokens() const {
    return min_element_tokens.value_or(level == Level::sentence ? 5 : 0);
}

void RunConfig::validate() const {
    if (k && *k == 0) throw UsageError("K must be at least 1");
    if (c99.rank_kernel < 3 || c99.rank_kernel % 2 == 0)
        throw UsageError("rank kernel must be odd and >= 3, got " + std::to_string(c99.rank_kernel));
    if (representation == Representation::topics && topic_k == 0)
        throw UsageError("the topics representation needs --topics K");
    if (rep.weighting == Weighting::tfidf && idf_path.empty())
        throw UsageError("tfidf weighting needs an idf table (--idf)");
    if (needs_embeddings() && embeddings_path.empty())
        throw UsageError("no embedding table given (--embeddings or TEXTSEG_EMBEDDINGS)");
    auto check = [](const std::string& path, std::string_view what) {
        if (!path.empty() && !std::filesystem::exists(path))
            throw DataError(std::string(what) + " file not found: " + path);
    };
    if (needs_embeddings()) check(embeddings_path, "embeddings");
    if (rep.weighting == Weighting::tfidf) check(idf_path, "idf");
    if (use_stopwords()) check(stopwords_path, "stopword");
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> list = {
        {"oC99", "bag of words, ranked cosine, greedy"},
        {"oC99tf", "summed word vectors, cosine without rank transform, greedy"},
        {"oC99tfidf", "idf-weighted word vectors, cosine without rank transform, greedy"},
        {"oC99k50", "50-topic histograms from spherical k-means, cosine, greedy"},
        {"oC99k200", "200-topic histograms from spherical k-means, cosine, greedy"},
        {"G-CVS", "summed word vectors, content-vector score, greedy"},
        {"R-CVS", "summed word vectors, content-vector score, greedy then refinement"},
        {"DP-CVS", "summed word vectors, content-vector score, dynamic programming"},
        {"CVSn", "normalized word vectors, content-vector score, greedy then refinement"},
    };
    return list;
}

void apply_preset(RunConfig& cfg, std::string_view name) {
    RunConfig base;
    cfg.rep = base.rep;
    cfg.c99 = base.c99;
    cfg.topic_k = 0;
    cfg.max_iters = base.max_iters;
    cfg.preset = std::string(name);
    if (name == "oC99") {
        cfg.representation = Representation::bag_of_words;
        cfg.scorer = ScorerKind::c99;
        cfg.splitter = SplitterKind::greedy;
    } else if (name == "oC99tf" || name == "oC99tfidf") {
        cfg.representation = Representation::embeddings;
        cfg.rep.weighting = name == "oC99tf" ? Weighting::tf : Weighting::tfidf;
        cfg.scorer = ScorerKind::c99;
        cfg.c99.use_rank = false;
        cfg.splitter = SplitterKind::greedy;
    } else if (name == "oC99k50" || name == "oC99k200") {
        cfg.representation = Representation::topics;
        cfg.topic_k = name == "oC99k50" ? 50 : 200;
        cfg.scorer = ScorerKind::c99;
        cfg.c99.use_rank = false;
        cfg.splitter = SplitterKind::greedy;
    } else if (name == "G-CVS" || name == "R-CVS" || name == "DP-CVS" || name == "CVSn") {
        cfg.representation = Representation::embeddings;
        cfg.scorer = ScorerKind::cvs;
        cfg.splitter = name == "G-CVS" ? SplitterKind::greedy : name == "DP-CVS" ? SplitterKind::dp : SplitterKind::refine;
        cfg.rep.normalize_word_vectors = name == "CVSn";
    } else {
        std::string known;
        for (const auto& p : presets()) known += (known.empty() ? "" : ", ") + std::string(p.name);
        throw UsageError("unknown preset '" + std::string(name) + "' (known: " + known + ")");
    }
}

nlohmann::json to_json(const RunConfig& cfg) {
    nlohmann::json j = {
        {"level", std::string(to_string(cfg.level))},
        {"representation", std::string(to_string(cfg.representation))},
        {"weighting", cfg.rep.weighting == Weighting::tf ? "tf" : "tfidf"},
        {"normalize_word_vectors", cfg.rep.normalize_word_vectors},
        {"normalize_element_vectors", cfg.rep.normalize_element_vectors},
        {"oov", cfg.rep.oov_policy == OovPolicy::skip ? "skip" : "error"},
        {"scorer", std::string(to_string(cfg.scorer))},
        {"splitter", std::string(to_string(cfg.splitter))},
        {"max_iters", cfg.max_iters},
        {"remove_stopwords", cfg.use_stopwords()},
        {"stem", cfg.stem},
        {"min_element_tokens", cfg.min_tokens()},
        {"seed", cfg.seed},
    };
    if (cfg.scorer == ScorerKind::c99) {
        j["rank_kernel"] = cfg.c99.rank_kernel;
        j["use_rank"] = cfg.c99.use_rank;
        j["rank_mode"] = cfg.c99.rank_mode == RankMode::corrected ? "corrected" : "literal";
    }
    if (cfg.representation == Representation::topics) j["topics"] = cfg.topic_k;
    if (cfg.k) j["k"] = *cfg.k;
    else j["k"] = "reference";
    if (!cfg.preset.empty()) j["preset"] = cfg.preset;
    return j;
}

}  // namespace textseg::cli
