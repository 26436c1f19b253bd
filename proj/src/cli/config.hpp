#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "textseg/embeddings.hpp"
#include "textseg/scoring.hpp"
#include "textseg/splitters.hpp"
#include "textseg/text_prep.hpp"

namespace textseg::cli {

/// Bad flags or option values; maps to exit status 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ExitCode : int { ok = 0, usage = 1, data = 2, internal = 3 };

enum class Representation { embeddings, bag_of_words, topics };

std::string_view to_string(Representation r);
Representation representation_from_string(std::string_view name);

/// Everything that selects how a document is segmented.
struct RunConfig {
    Level level = Level::sentence;

    Representation representation = Representation::embeddings;
    RepresentationConfig rep;
    std::size_t topic_k = 0;

    ScorerKind scorer = ScorerKind::cvs;
    C99Options c99;

    SplitterKind splitter = SplitterKind::refine;
    std::size_t max_iters = kDefaultRefineIterations;
    /// Unset means: take K from the reference segmentation.
    std::optional<std::size_t> k;

    std::string embeddings_path;
    std::string idf_path;
    std::string stopwords_path;

    /// Unset values depend on the level: sentences drop stopwords and
    /// elements under 5 tokens, words and characters are kept as they are.
    std::optional<bool> remove_stopwords;
    bool stem = false;
    std::optional<std::size_t> min_element_tokens;

    std::uint64_t seed = 1;
    std::string preset;

    bool use_stopwords() const;
    std::size_t min_tokens() const;
    bool needs_embeddings() const { return representation != Representation::bag_of_words; }

    /// Throws UsageError for inconsistent settings and DataError for missing
    /// resource files.
    void validate() const;
};

struct Preset {
    std::string_view name;
    std::string_view description;
};

const std::vector<Preset>& presets();

/// Overwrites the representation, scorer and splitter fields of `cfg`.
void apply_preset(RunConfig& cfg, std::string_view name);

nlohmann::json to_json(const RunConfig& cfg);

}  // namespace textseg::cli
