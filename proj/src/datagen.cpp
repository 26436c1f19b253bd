#include "textseg/datagen.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "textseg/error.hpp"
#include "textseg/log.hpp"
#include "textseg/metrics.hpp"
#include "textseg/random.hpp"

namespace textseg {
namespace {

using nlohmann::json;

std::string element_key(const TokenList& tokens) {
    std::string key;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) key.push_back(' ');
        key += tokens[i];
    }
    return key;
}

std::string doc_name(std::size_t index) {
    std::ostringstream os;
    os << std::setw(4) << std::setfill('0') << index;
    return os.str();
}

LabeledDocument assemble(std::string id, Level level, std::vector<TokenList> elements, std::vector<std::size_t> lengths,
                         std::vector<SourceSpan> sources) {
    LabeledDocument out;
    out.doc = make_document(std::move(id), level, std::move(elements));
    out.reference = Segmentation::from_lengths(lengths);
    out.sources = std::move(sources);
    return out;
}

}  // namespace

std::string_view to_string(DatasetStyle style) {
    return style == DatasetStyle::sentence_concat ? "sentence_concat" : "word_chunk";
}

DatasetStyle dataset_style_from_string(std::string_view name) {
    if (name == "sentence_concat" || name == "sentence") return DatasetStyle::sentence_concat;
    if (name == "word_chunk" || name == "word") return DatasetStyle::word_chunk;
    throw std::invalid_argument("unknown dataset style '" + std::string(name) + "'");
}

void DatasetSpec::validate() const {
    if (n_min < 1 || n_min > n_max)
        throw std::invalid_argument("segment length range must satisfy 1 <= min <= max, got " + std::to_string(n_min) +
                                    ".." + std::to_string(n_max));
    if (num_segments < 2) throw std::invalid_argument("a dataset document needs at least 2 segments");
}

std::vector<LabeledDocument> gen_sentence_concat(std::span<const TokenizedDocument> corpus, const DatasetSpec& spec) {
    spec.validate();
    if (corpus.size() < spec.num_segments)
        throw DataError("corpus has " + std::to_string(corpus.size()) + " documents, need at least " +
                        std::to_string(spec.num_segments));
    for (const auto& d : corpus)
        if (d.size() < spec.n_max)
            throw DataError("corpus document '" + d.id + "' has " + std::to_string(d.size()) +
                            " sentences, need at least " + std::to_string(spec.n_max));

    Rng rng(spec.seed);
    std::vector<LabeledDocument> out;
    out.reserve(spec.num_documents);
    for (std::size_t doc = 0; doc < spec.num_documents; ++doc) {
        const auto picks = rng.sample(corpus.size(), spec.num_segments);
        std::vector<TokenList> elements;
        std::vector<std::size_t> lengths;
        std::vector<SourceSpan> sources;
        for (std::size_t src : picks) {
            const auto n = static_cast<std::size_t>(
                rng.uniform_int(static_cast<std::int64_t>(spec.n_min), static_cast<std::int64_t>(spec.n_max)));
            const auto& d = corpus[src];
            elements.insert(elements.end(), d.elements.begin(), d.elements.begin() + static_cast<std::ptrdiff_t>(n));
            lengths.push_back(n);
            sources.push_back({d.id, 0, n});
        }
        out.push_back(assemble(doc_name(doc), Level::sentence, std::move(elements), std::move(lengths), std::move(sources)));
    }
    return out;
}

std::vector<LabeledDocument> gen_word_chunk(std::span<const TokenizedDocument> corpus, const DatasetSpec& spec) {
    spec.validate();
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (corpus[i].size() >= spec.n_max)
            eligible.push_back(i);
        else
            log::warn("skipping corpus document '" + corpus[i].id + "': " + std::to_string(corpus[i].size()) +
                      " words, need " + std::to_string(spec.n_max));
    }
    if (eligible.empty()) throw DataError("no corpus document is long enough for word chunks");

    Rng rng(spec.seed);
    std::vector<LabeledDocument> out;
    out.reserve(spec.num_documents);
    for (std::size_t doc = 0; doc < spec.num_documents; ++doc) {
        std::vector<TokenList> elements;
        std::vector<std::size_t> lengths;
        std::vector<SourceSpan> sources;
        for (std::size_t t = 0; t < spec.num_segments; ++t) {
            const auto& d = corpus[eligible[rng.below(eligible.size())]];
            const auto n = static_cast<std::size_t>(
                rng.uniform_int(static_cast<std::int64_t>(spec.n_min), static_cast<std::int64_t>(spec.n_max)));
            const auto offset = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(d.size() - n)));
            for (std::size_t w = offset; w < offset + n; ++w) elements.push_back(d.elements[w]);
            lengths.push_back(n);
            sources.push_back({d.id, offset, offset + n});
        }
        out.push_back(assemble(doc_name(doc), Level::word, std::move(elements), std::move(lengths), std::move(sources)));
    }
    return out;
}

std::vector<LabeledDocument> generate_dataset(std::span<const TokenizedDocument> corpus, const DatasetSpec& spec) {
    return spec.style == DatasetStyle::sentence_concat ? gen_sentence_concat(corpus, spec) : gen_word_chunk(corpus, spec);
}

ChoiDocument to_choi(const LabeledDocument& doc) {
    doc.reference.validate();
    if (doc.reference.n_elements != doc.doc.size())
        throw std::invalid_argument("reference of '" + doc.doc.id + "' does not match its element count");
    ChoiDocument choi;
    for (std::size_t k = 0; k < doc.reference.num_segments(); ++k) {
        std::vector<std::string> lines;
        const std::size_t b = doc.reference.segment_begin(k), e = doc.reference.segment_end(k);
        if (doc.doc.level == Level::sentence) {
            for (std::size_t i = b; i < e; ++i) {
                if (doc.doc.elements[i].empty())
                    throw std::invalid_argument("element " + std::to_string(i) + " of '" + doc.doc.id + "' has no tokens");
                lines.push_back(element_key(doc.doc.elements[i]));
            }
        } else {
            for (std::size_t i = b; i < e; i += kWordsPerLine) {
                TokenList chunk;
                for (std::size_t w = i; w < std::min(e, i + kWordsPerLine); ++w) chunk.push_back(doc.doc.elements[w].front());
                lines.push_back(element_key(chunk));
            }
        }
        choi.segments.push_back(std::move(lines));
    }
    return choi;
}

LabeledDocument from_choi(const ChoiDocument& choi, std::string id, Level level) {
    std::vector<TokenList> elements;
    std::vector<std::size_t> lengths;
    std::vector<SourceSpan> sources;
    for (const auto& seg : choi.segments) {
        const std::size_t begin = elements.size();
        for (const auto& line : seg) {
            std::istringstream fields(line);
            TokenList tokens;
            for (std::string tok; fields >> tok;) tokens.push_back(std::move(tok));
            if (level == Level::sentence) {
                elements.push_back(std::move(tokens));
            } else {
                for (auto& tok : tokens) elements.push_back({std::move(tok)});
            }
        }
        lengths.push_back(elements.size() - begin);
        sources.push_back({id, begin, elements.size()});
    }
    return assemble(std::move(id), level, std::move(elements), std::move(lengths), std::move(sources));
}

void write_reference_file(const LabeledDocument& doc, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    write_choi(out, to_choi(doc));
    if (!out) throw DataError("failed writing " + path.string());
}

LabeledDocument read_reference_file(const std::filesystem::path& path, Level level) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open reference file " + path.string());
    return from_choi(parse_choi(in, path.string()), path.stem().string(), level);
}

DatasetStats dataset_stats(std::span<const LabeledDocument> docs) {
    DatasetStats s;
    s.documents = docs.size();
    std::unordered_set<std::string> unique, initial;
    for (const auto& d : docs) {
        s.total_elements += d.doc.size();
        for (const auto& el : d.doc.elements) unique.insert(element_key(el));
        for (std::size_t k = 0; k < d.reference.num_segments(); ++k)
            initial.insert(element_key(d.doc.elements[d.reference.segment_begin(k)]));
    }
    s.unique_elements = unique.size();
    s.unique_segment_initial = initial.size();
    return s;
}

double AuditReport::precision() const {
    const auto denom = true_positive + false_positive;
    return denom ? static_cast<double>(true_positive) / static_cast<double>(denom) : 0.0;
}

double AuditReport::recall() const {
    const auto denom = true_positive + false_negative;
    return denom ? static_cast<double>(true_positive) / static_cast<double>(denom) : 0.0;
}

double AuditReport::accuracy() const {
    const auto total = true_positive + false_positive + false_negative + true_negative;
    return total ? static_cast<double>(true_positive + true_negative) / static_cast<double>(total) : 0.0;
}

namespace {

void audit_into(const std::unordered_set<std::string>& starts, std::span<const LabeledDocument> test, AuditReport& r,
                double& pk_sum) {
    for (const auto& d : test) {
        const std::size_t n = d.doc.size();
        std::unordered_set<std::size_t> truth(d.reference.boundaries.begin(), d.reference.boundaries.end());
        std::vector<std::size_t> predicted;
        for (std::size_t p = 1; p < n; ++p) {
            const bool guess = starts.contains(element_key(d.doc.elements[p]));
            const bool actual = truth.contains(p);
            if (guess) predicted.push_back(p);
            if (guess && actual) ++r.true_positive;
            else if (guess) ++r.false_positive;
            else if (actual) ++r.false_negative;
            else ++r.true_negative;
        }
        predicted.push_back(n);
        if (n >= 2 && default_k(d.reference) < n) pk_sum += pk(d.reference, Segmentation(predicted, n));
        ++r.documents;
    }
}

void collect_starts(std::span<const LabeledDocument> train, std::unordered_set<std::string>& starts) {
    for (const auto& d : train)
        for (std::size_t k = 0; k < d.reference.num_segments(); ++k)
            starts.insert(element_key(d.doc.elements[d.reference.segment_begin(k)]));
}

}  // namespace

AuditReport leakage_audit(std::span<const LabeledDocument> train, std::span<const LabeledDocument> test) {
    std::unordered_set<std::string> starts;
    collect_starts(train, starts);
    AuditReport r;
    double pk_sum = 0.0;
    audit_into(starts, test, r, pk_sum);
    r.mean_pk = r.documents ? pk_sum / static_cast<double>(r.documents) : 0.0;
    return r;
}

AuditReport cross_validated_audit(std::span<const LabeledDocument> docs, std::size_t folds) {
    if (folds < 2) throw std::invalid_argument("cross-validation needs at least 2 folds");
    if (docs.size() < folds) throw std::invalid_argument("fewer documents than folds");
    AuditReport r;
    double pk_sum = 0.0;
    for (std::size_t f = 0; f < folds; ++f) {
        std::vector<LabeledDocument> train, test;
        for (std::size_t i = 0; i < docs.size(); ++i) (i % folds == f ? test : train).push_back(docs[i]);
        std::unordered_set<std::string> starts;
        collect_starts(train, starts);
        audit_into(starts, test, r, pk_sum);
    }
    r.mean_pk = r.documents ? pk_sum / static_cast<double>(r.documents) : 0.0;
    return r;
}

namespace {

json spec_to_json(const DatasetSpec& spec) {
    return {{"style", std::string(to_string(spec.style))},
            {"n_min", spec.n_min},
            {"n_max", spec.n_max},
            {"num_segments", spec.num_segments},
            {"num_documents", spec.num_documents},
            {"seed", spec.seed}};
}

DatasetSpec spec_from_json(const json& j) {
    DatasetSpec spec;
    spec.style = dataset_style_from_string(j.at("style").get<std::string>());
    spec.n_min = j.at("n_min").get<std::size_t>();
    spec.n_max = j.at("n_max").get<std::size_t>();
    spec.num_segments = j.at("num_segments").get<std::size_t>();
    spec.num_documents = j.at("num_documents").get<std::size_t>();
    spec.seed = j.at("seed").get<std::uint64_t>();
    return spec;
}

}  // namespace

Manifest write_dataset(const std::filesystem::path& dir, const DatasetSpec& spec,
                       std::span<const std::string> corpus_ids, std::span<const LabeledDocument> docs) {
    std::filesystem::create_directories(dir);
    Manifest m;
    m.spec = spec;
    m.level = spec.style == DatasetStyle::sentence_concat ? Level::sentence : Level::word;
    m.generator = std::string(Rng::kName);
    m.corpus_ids.assign(corpus_ids.begin(), corpus_ids.end());
    m.stats = dataset_stats(docs);

    json jdocs = json::array();
    for (const auto& d : docs) {
        ManifestEntry e{d.doc.id + ".ref", d.reference, d.sources};
        write_reference_file(d, dir / e.file);
        json jsrc = json::array();
        for (const auto& s : d.sources) jsrc.push_back({{"doc", s.doc_id}, {"begin", s.begin}, {"end", s.end}});
        jdocs.push_back({{"file", e.file}, {"boundaries", d.reference.boundaries}, {"sources", jsrc}});
        m.documents.push_back(std::move(e));
    }
    json j = {{"generator", m.generator},
              {"level", std::string(to_string(m.level))},
              {"spec", spec_to_json(spec)},
              {"corpus_ids", m.corpus_ids},
              {"documents", jdocs},
              {"stats",
               {{"documents", m.stats.documents},
                {"total_elements", m.stats.total_elements},
                {"unique_elements", m.stats.unique_elements},
                {"unique_segment_initial", m.stats.unique_segment_initial}}}};
    std::ofstream out(dir / kManifestName, std::ios::binary);
    if (!out) throw DataError("cannot write manifest in " + dir.string());
    out << j.dump(1) << '\n';
    return m;
}

Manifest read_manifest(const std::filesystem::path& dir) {
    const auto path = dir / kManifestName;
    std::ifstream in(path);
    if (!in) throw DataError("no " + std::string(kManifestName) + " in " + dir.string());
    try {
        const json j = json::parse(in);
        Manifest m;
        m.generator = j.value("generator", "");
        m.level = level_from_string(j.value("level", "sentence"));
        m.spec = spec_from_json(j.at("spec"));
        m.corpus_ids = j.value("corpus_ids", std::vector<std::string>{});
        for (const auto& jd : j.at("documents")) {
            ManifestEntry e;
            e.file = jd.at("file").get<std::string>();
            e.reference.boundaries = jd.at("boundaries").get<std::vector<std::size_t>>();
            e.reference.n_elements = e.reference.boundaries.empty() ? 0 : e.reference.boundaries.back();
            for (const auto& js : jd.value("sources", json::array()))
                e.sources.push_back({js.at("doc").get<std::string>(), js.at("begin").get<std::size_t>(),
                                     js.at("end").get<std::size_t>()});
            m.documents.push_back(std::move(e));
        }
        if (const auto it = j.find("stats"); it != j.end()) {
            m.stats.documents = it->value("documents", std::size_t{0});
            m.stats.total_elements = it->value("total_elements", std::size_t{0});
            m.stats.unique_elements = it->value("unique_elements", std::size_t{0});
            m.stats.unique_segment_initial = it->value("unique_segment_initial", std::size_t{0});
        }
        return m;
    } catch (const json::exception& e) {
        throw DataError(path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

std::vector<LabeledDocument> read_dataset(const std::filesystem::path& dir, Manifest* manifest) {
    Manifest m = read_manifest(dir);
    std::vector<LabeledDocument> docs;
    docs.reserve(m.documents.size());
    for (const auto& e : m.documents) {
        auto d = read_reference_file(dir / e.file, m.level);
        if (d.reference.boundaries != e.reference.boundaries)
            throw DataError((dir / e.file).string() + ": boundaries differ from the manifest");
        if (!e.sources.empty()) d.sources = e.sources;
        docs.push_back(std::move(d));
    }
    if (manifest) *manifest = std::move(m);
    return docs;
}

}  // namespace textseg
