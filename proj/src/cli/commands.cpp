#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/pipeline.hpp"
#include "cli/render.hpp"
#include "textseg/choi_format.hpp"
#include "textseg/datagen.hpp"
#include "textseg/error.hpp"
#include "textseg/log.hpp"
#include "textseg/metrics.hpp"
#include "textseg/porter.hpp"

#ifndef TEXTSEG_DEFAULT_STOPWORDS
#define TEXTSEG_DEFAULT_STOPWORDS ""
#endif

namespace textseg::cli {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n\v\f";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

/// Output file or the command's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
        if (!path.empty() && path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) throw DataError("cannot write " + path);
            out_ = &file_;
        }
    }
    std::ostream& operator*() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

// ---------------------------------------------------------------------------
// segment input

struct SegmentInput {
    RawDocument raw;
    TokenizedDocument doc;
    std::optional<Segmentation> reference;
};

enum class InputFormat { automatic, text, choi };

bool has_delimiter_line(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = std::min(text.find('\n', pos), text.size());
        if (trim(text.substr(pos, nl - pos)) == kChoiDelimiter) return true;
        pos = nl + 1;
    }
    return false;
}

TokenizedDocument tokenize_level(const RawDocument& raw, Level level, bool line_sentences) {
    switch (level) {
        case Level::word: return tokenize_words(raw);
        case Level::character: return tokenize_chars(raw);
        case Level::sentence: break;
    }
    return line_sentences ? tokenize_lines(raw) : split_sentences(raw);
}

// Delimiter lines are blanked out (keeping byte offsets) before tokenizing;
// an element starts a new reference segment when a delimiter line lies
// between it and the previous element.
SegmentInput read_segment_input(const std::filesystem::path& path, Level level, InputFormat format) {
    SegmentInput in;
    in.raw = {path.stem().string(), read_file(path)};
    if (trim(in.raw.text).empty()) throw DataError(path.string() + ": empty document");
    const bool choi = format == InputFormat::choi || (format == InputFormat::automatic && has_delimiter_line(in.raw.text));
    if (!choi) {
        in.doc = tokenize_level(in.raw, level, false);
        return in;
    }
    {
        std::istringstream check(in.raw.text);
        parse_choi(check, path.string());
    }
    RawDocument masked = in.raw;
    std::vector<std::size_t> delimiters;
    std::size_t pos = 0;
    while (pos < masked.text.size()) {
        const std::size_t nl = std::min(masked.text.find('\n', pos), masked.text.size());
        if (trim(std::string_view(masked.text).substr(pos, nl - pos)) == kChoiDelimiter) {
            delimiters.push_back(pos);
            std::fill(masked.text.begin() + static_cast<std::ptrdiff_t>(pos),
                      masked.text.begin() + static_cast<std::ptrdiff_t>(nl), ' ');
        }
        pos = nl + 1;
    }
    in.doc = tokenize_level(masked, level, true);
    in.doc.id = in.raw.id;
    std::vector<std::size_t> bounds;
    std::size_t d = 0;
    for (std::size_t i = 0; i < in.doc.size(); ++i) {
        bool crossed = false;
        while (d < delimiters.size() && delimiters[d] < in.doc.spans[i].offset) {
            crossed = true;
            ++d;
        }
        if (crossed && i > 0) bounds.push_back(i);
    }
    bounds.push_back(in.doc.size());
    in.reference = Segmentation(std::move(bounds), in.doc.size());
    return in;
}

// ---------------------------------------------------------------------------
// corpus

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw DataError("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().filename().string().starts_with(".")) continue;
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw DataError("no corpus files in " + dir.string());
    return files;
}

// ---------------------------------------------------------------------------
// options

struct Options {
    std::string config_path;
    std::string level = "sentence";
    std::string representation = "embeddings";
    std::string weighting = "tf";
    bool normalize_words = false;
    bool normalize_elements = false;
    std::string oov = "skip";
    std::size_t topics = 0;
    std::string scorer = "cvs";
    int rank_kernel = 11;
    bool no_rank = false;
    std::string rank_mode = "corrected";
    std::string splitter = "refine";
    std::size_t max_iters = kDefaultRefineIterations;
    std::size_t k = 0;
    std::string embeddings;
    std::string idf;
    std::string stopwords;
    bool remove_stopwords = true;
    bool stem = false;
    std::size_t min_tokens = 0;
    std::uint64_t seed = 1;
    std::string preset;
    bool quiet = false;
    bool verbose = false;

    std::map<std::string, CLI::Option*> opt;

    bool given(const std::string& name) const {
        const auto it = opt.find(name);
        return it != opt.end() && it->second->count() > 0;
    }
};

void add_run_options(CLI::App& app, Options& o) {
    app.set_config("--config", "", "key=value file with default option values");
    o.opt["level"] = app.add_option("--level", o.level, "element granularity: sentence, word or character")
                         ->check(CLI::IsMember({"sentence", "word", "character", "char"}));
    o.opt["representation"] = app.add_option("--representation", o.representation, "embeddings, bow or topics")
                                  ->check(CLI::IsMember({"embeddings", "bow", "topics"}));
    o.opt["weighting"] =
        app.add_option("--weighting", o.weighting, "tf or tfidf")->check(CLI::IsMember({"tf", "tfidf"}));
    o.opt["normalize-words"] = app.add_flag("--normalize-words", o.normalize_words, "unit-normalize word vectors");
    o.opt["normalize-elements"] =
        app.add_flag("--normalize-elements", o.normalize_elements, "unit-normalize element vectors");
    o.opt["oov"] = app.add_option("--oov", o.oov, "out-of-vocabulary tokens: skip or error")
                       ->check(CLI::IsMember({"skip", "error"}));
    o.opt["topics"] = app.add_option("--topics", o.topics, "number of spherical k-means topics");
    o.opt["scorer"] = app.add_option("--scorer", o.scorer, "c99, euclidean or cvs")
                          ->check(CLI::IsMember({"c99", "euclidean", "cvs"}));
    o.opt["rank-kernel"] = app.add_option("--rank-kernel", o.rank_kernel, "rank transform block size (odd)");
    o.opt["no-rank"] = app.add_flag("--no-rank", o.no_rank, "use the cosine matrix without rank transform");
    o.opt["rank-mode"] = app.add_option("--rank-mode", o.rank_mode, "corrected or literal")
                             ->check(CLI::IsMember({"corrected", "literal"}));
    o.opt["splitter"] = app.add_option("--splitter", o.splitter, "greedy, dp or refine")
                            ->check(CLI::IsMember({"greedy", "dp", "refine"}));
    o.opt["max-iters"] = app.add_option("--max-iters", o.max_iters, "refinement sweep limit");
    o.opt["k"] = app.add_option("-k,--segments", o.k, "number of segments (default: from the reference)")
                     ->check(CLI::PositiveNumber);
    o.opt["embeddings"] = app.add_option("--embeddings", o.embeddings, "word vector file")->envname("TEXTSEG_EMBEDDINGS");
    o.opt["idf"] = app.add_option("--idf", o.idf, "idf table");
    o.opt["stopwords"] = app.add_option("--stopwords", o.stopwords, "stopword file")->envname("TEXTSEG_STOPWORDS");
    o.opt["remove-stopwords"] =
        app.add_flag("--remove-stopwords,!--keep-stopwords", o.remove_stopwords, "drop stopwords and punctuation");
    o.opt["stem"] = app.add_flag("--stem", o.stem, "Porter-stem tokens");
    o.opt["min-tokens"] = app.add_option("--min-tokens", o.min_tokens, "drop elements with fewer tokens");
    o.opt["seed"] = app.add_option("--seed", o.seed, "random seed");
    o.opt["preset"] = app.add_option("--preset", o.preset, "named configuration (see `textseg presets`)");
    app.add_flag("-q,--quiet", o.quiet, "suppress warnings");
    app.add_flag("-v,--verbose", o.verbose, "progress messages");
}

RunConfig build_config(const Options& o) {
    RunConfig cfg;
    if (o.given("preset")) apply_preset(cfg, o.preset);
    if (o.given("level")) cfg.level = level_from_string(o.level);
    if (o.given("representation")) cfg.representation = representation_from_string(o.representation);
    if (o.given("weighting")) cfg.rep.weighting = o.weighting == "tfidf" ? Weighting::tfidf : Weighting::tf;
    if (o.given("normalize-words")) cfg.rep.normalize_word_vectors = o.normalize_words;
    if (o.given("normalize-elements")) cfg.rep.normalize_element_vectors = o.normalize_elements;
    if (o.given("oov")) cfg.rep.oov_policy = o.oov == "error" ? OovPolicy::error : OovPolicy::skip;
    if (o.given("topics")) cfg.topic_k = o.topics;
    if (o.given("scorer")) cfg.scorer = scorer_kind_from_string(o.scorer);
    if (o.given("rank-kernel")) cfg.c99.rank_kernel = o.rank_kernel;
    if (o.given("no-rank")) cfg.c99.use_rank = !o.no_rank;
    if (o.given("rank-mode")) cfg.c99.rank_mode = o.rank_mode == "literal" ? RankMode::literal : RankMode::corrected;
    if (o.given("splitter")) cfg.splitter = splitter_kind_from_string(o.splitter);
    if (o.given("max-iters")) cfg.max_iters = o.max_iters;
    if (o.given("k")) cfg.k = o.k;
    cfg.embeddings_path = o.embeddings;
    cfg.idf_path = o.idf;
    cfg.stopwords_path = o.stopwords.empty() ? std::string(TEXTSEG_DEFAULT_STOPWORDS) : o.stopwords;
    if (o.given("remove-stopwords")) cfg.remove_stopwords = o.remove_stopwords;
    if (o.given("stem")) cfg.stem = o.stem;
    if (o.given("min-tokens")) cfg.min_element_tokens = o.min_tokens;
    if (o.given("seed")) cfg.seed = o.seed;
    return cfg;
}

json segments_json(const Segmentation& seg) { return seg.boundaries; }

std::string fixed(double v, int digits = 4) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

// ---------------------------------------------------------------------------
// segment

struct SegmentArgs {
    std::string input;
    std::string output;
    std::string input_format = "auto";
    std::string annotate = "none";
    std::string annotate_output;
    bool json = false;
};

int cmd_segment(const RunConfig& cfg, const SegmentArgs& a, std::ostream& out) {
    cfg.validate();
    const InputFormat format = a.input_format == "choi" ? InputFormat::choi
                               : a.input_format == "text" ? InputFormat::text
                                                          : InputFormat::automatic;
    const SegmentInput in = read_segment_input(a.input, cfg.level, format);
    std::size_t k = 0;
    if (cfg.k) k = *cfg.k;
    else if (in.reference) k = in.reference->num_segments();
    else throw UsageError("no K given and the input carries no reference segmentation (use -k)");

    Resources res;
    res.stopwords = load_stopword_set(cfg);
    const TokenizedDocument prepared = prepare(in.doc, cfg, res);
    const auto vocab = vocabulary(std::span(&prepared, 1));
    load_tables(cfg, &vocab, res);
    const DocumentResult r = segment_document(in.doc, k, cfg, res);
    const auto extents = segment_extents(r.hypothesis, in.doc);

    Sink sink(a.output, out);
    if (a.json) {
        json segs = json::array();
        for (const auto& e : extents)
            segs.push_back({{"begin", e.begin}, {"end", e.end}, {"byte_begin", e.byte_begin}, {"byte_end", e.byte_end}});
        json j = {{"document", a.input},
                  {"n_elements", in.doc.size()},
                  {"n_kept", r.prepared.size()},
                  {"k", r.k_used},
                  {"boundaries", segments_json(r.hypothesis)},
                  {"segments", segs},
                  {"cost", r.split.cost},
                  {"config", to_json(cfg)}};
        if (cfg.splitter == SplitterKind::refine) {
            j["iterations"] = r.split.iterations_used;
            j["converged"] = r.split.converged;
        }
        if (in.reference) {
            j["reference"] = segments_json(*in.reference);
            if (in.doc.size() >= 2 && default_k(*in.reference) < in.doc.size()) {
                const auto ev = evaluate(*in.reference, r.hypothesis);
                j["pk"] = ev.pk;
                j["wd"] = ev.wd;
            }
        }
        *sink << j.dump() << '\n';
    } else {
        *sink << "document: " << a.input << '\n';
        *sink << "elements: " << in.doc.size() << " (" << r.prepared.size() << " kept)\n";
        *sink << "boundaries: " << r.hypothesis.to_string() << '\n';
        *sink << "segment\tbegin\tend\tbyte_begin\tbyte_end\n";
        for (std::size_t s = 0; s < extents.size(); ++s)
            *sink << s + 1 << '\t' << extents[s].begin << '\t' << extents[s].end << '\t' << extents[s].byte_begin
                  << '\t' << extents[s].byte_end << '\n';
    }

    if (a.annotate != "none") {
        Sink ann(a.annotate_output, out);
        if (a.annotate == "html")
            render_html(*ann, in.raw.text, extents);
        else
            render_ansi(*ann, in.raw.text, extents);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateArgs {
    std::string reference;
    std::string hypothesis;
    std::size_t k = 0;
    bool json = false;
};

int cmd_evaluate(const RunConfig& cfg, const EvaluateArgs& a, CLI::Option* k_opt, std::ostream& out) {
    const Level level = cfg.level == Level::character ? Level::sentence : cfg.level;
    const auto ref = read_reference_file(a.reference, level);
    const auto hyp = read_reference_file(a.hypothesis, level);
    if (ref.reference.n_elements != hyp.reference.n_elements)
        throw DataError("reference has " + std::to_string(ref.reference.n_elements) + " elements, hypothesis has " +
                        std::to_string(hyp.reference.n_elements));
    std::optional<std::size_t> k;
    if (k_opt->count()) k = a.k;
    if (ref.reference.n_elements < 2) throw DataError("documents need at least 2 elements to evaluate");
    const auto report = evaluate(ref.reference, hyp.reference, k);
    if (a.json) {
        out << json{{"reference", a.reference},
                    {"hypothesis", a.hypothesis},
                    {"n_elements", ref.reference.n_elements},
                    {"pk", report.pk},
                    {"wd", report.wd},
                    {"k_used", report.k_used},
                    {"n_probes", report.n_probes}}
                   .dump()
            << '\n';
    } else {
        out << "pk\t" << fixed(report.pk) << '\n'
            << "wd\t" << fixed(report.wd) << '\n'
            << "k\t" << report.k_used << '\n'
            << "probes\t" << report.n_probes << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// benchmark

struct BenchmarkArgs {
    std::string dataset;
    std::string records;
    std::string summary;
    std::string compare;
    std::size_t workers = 1;
    std::size_t limit = 0;
    bool no_timings = false;
};

struct DocOutcome {
    std::string id;
    std::optional<std::string> error;
    std::size_t n = 0;
    std::size_t n_kept = 0;
    DocumentResult result;
    EvalReport eval;
    std::optional<EvalReport> compare_eval;
    std::optional<double> pk_between;
    double metrics_ms = 0.0;
    Segmentation reference;
};

int cmd_benchmark(const RunConfig& cfg, const BenchmarkArgs& a, std::ostream& out) {
    cfg.validate();
    if (!std::filesystem::is_directory(a.dataset)) throw DataError("dataset directory not found: " + a.dataset);
    Manifest manifest;
    auto docs = read_dataset(a.dataset, &manifest);
    if (a.limit && docs.size() > a.limit) docs.resize(a.limit);
    if (docs.empty()) throw DataError("dataset " + a.dataset + " has no documents");
    std::sort(docs.begin(), docs.end(), [](const auto& x, const auto& y) { return x.doc.id < y.doc.id; });
    std::optional<SplitterKind> compare;
    if (!a.compare.empty()) compare = splitter_kind_from_string(a.compare);

    RunConfig run_cfg = cfg;
    if (manifest.level != run_cfg.level) run_cfg.level = manifest.level;

    const auto t_load = Clock::now();
    Resources res;
    res.stopwords = load_stopword_set(run_cfg);
    std::unordered_set<std::string> vocab;
    for (const auto& d : docs) {
        try {
            const auto p = prepare(d.doc, run_cfg, res);
            for (const auto& el : p.elements) vocab.insert(el.begin(), el.end());
        } catch (const DataError&) {
            // reported per document below
        }
    }
    load_tables(run_cfg, &vocab, res);
    const double load_ms = std::chrono::duration<double, std::milli>(Clock::now() - t_load).count();

    std::vector<DocOutcome> outcomes(docs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < docs.size(); i = next++) {
            const auto& d = docs[i];
            DocOutcome& o = outcomes[i];
            o.id = d.doc.id;
            o.n = d.doc.size();
            o.reference = d.reference;
            try {
                const std::size_t k = run_cfg.k ? *run_cfg.k : d.reference.num_segments();
                o.result = segment_document(d.doc, k, run_cfg, res, compare);
                o.n_kept = o.result.prepared.size();
                const auto t0 = Clock::now();
                o.eval = evaluate(d.reference, o.result.hypothesis);
                if (o.result.compare_hypothesis) {
                    o.compare_eval = evaluate(d.reference, *o.result.compare_hypothesis);
                    o.pk_between = pk(*o.result.compare_hypothesis, o.result.hypothesis, o.eval.k_used);
                }
                o.metrics_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            } catch (const std::exception& e) {
                o.error = e.what();
            }
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min(a.workers, docs.size()));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    Sink records(a.records, out);
    const bool records_to_out = a.records.empty() || a.records == "-";
    std::size_t ok = 0;
    double sum_pk = 0, sum_wd = 0, sum_cpk = 0, sum_cwd = 0, sum_between = 0;
    StageTimes total;
    double total_metrics = 0, total_compare = 0;
    std::size_t converged = 0;
    for (const auto& o : outcomes) {
        json rec = {{"document", o.id}};
        if (o.error) {
            rec["error"] = *o.error;
            log::warn(o.id + ": " + *o.error);
        } else {
            ++ok;
            const auto& r = o.result;
            sum_pk += o.eval.pk;
            sum_wd += o.eval.wd;
            if (r.split.converged) ++converged;
            rec.update({{"n_elements", o.n},
                        {"n_kept", o.n_kept},
                        {"k", r.k_used},
                        {"pk", o.eval.pk},
                        {"wd", o.eval.wd},
                        {"probe_k", o.eval.k_used},
                        {"boundaries", segments_json(r.hypothesis)},
                        {"reference", segments_json(o.reference)},
                        {"cost", r.split.cost},
                        {"oov_tokens", r.stats.oov_tokens}});
            if (run_cfg.splitter == SplitterKind::refine) {
                rec["iterations"] = r.split.iterations_used;
                rec["converged"] = r.split.converged;
            }
            total.prepare_ms += r.times.prepare_ms;
            total.precompute_ms += r.times.precompute_ms;
            total.split_ms += r.times.split_ms;
            total_metrics += o.metrics_ms;
            if (!a.no_timings)
                rec["timings"] = {{"prepare_ms", r.times.prepare_ms},
                                  {"precompute_ms", r.times.precompute_ms},
                                  {"split_ms", r.times.split_ms},
                                  {"metrics_ms", o.metrics_ms}};
            if (o.compare_eval) {
                sum_cpk += o.compare_eval->pk;
                sum_cwd += o.compare_eval->wd;
                sum_between += *o.pk_between;
                total_compare += r.compare_ms;
                json c = {{"splitter", a.compare},
                          {"pk", o.compare_eval->pk},
                          {"wd", o.compare_eval->wd},
                          {"boundaries", segments_json(*r.compare_hypothesis)},
                          {"cost", r.compare->cost},
                          {"pk_between", *o.pk_between}};
                if (!a.no_timings) c["split_ms"] = r.compare_ms;
                rec["compare"] = c;
            }
        }
        *records << rec.dump() << '\n';
    }

    const double n_ok = static_cast<double>(ok);
    json summary = {{"dataset", a.dataset},
                    {"documents", docs.size()},
                    {"failed", docs.size() - ok},
                    {"config", to_json(run_cfg)}};
    if (ok) {
        summary["mean_pk"] = sum_pk / n_ok;
        summary["mean_wd"] = sum_wd / n_ok;
        if (run_cfg.splitter == SplitterKind::refine) summary["converged"] = converged;
        if (compare) {
            json c = {{"splitter", a.compare},
                      {"mean_pk", sum_cpk / n_ok},
                      {"mean_wd", sum_cwd / n_ok},
                      {"mean_pk_between", sum_between / n_ok}};
            if (!a.no_timings) {
                c["split_ms"] = total_compare;
                c["time_ratio"] = total.split_ms > 0 ? total_compare / total.split_ms : 0.0;
            }
            summary["compare"] = c;
        }
    }
    if (!a.no_timings)
        summary["timings"] = {{"load_ms", load_ms},
                              {"prepare_ms", total.prepare_ms},
                              {"precompute_ms", total.precompute_ms},
                              {"split_ms", total.split_ms},
                              {"metrics_ms", total_metrics},
                              {"workers", workers}};
    if (!a.summary.empty()) {
        Sink s(a.summary, out);
        *s << summary.dump(1) << '\n';
    }

    if (!records_to_out) {
        out << "documents\t" << docs.size() << " (" << docs.size() - ok << " failed)\n";
        if (ok) {
            out << "mean pk\t" << fixed(sum_pk / n_ok) << '\n' << "mean wd\t" << fixed(sum_wd / n_ok) << '\n';
            if (compare) {
                out << a.compare << " mean pk\t" << fixed(sum_cpk / n_ok) << '\n'
                    << a.compare << " mean wd\t" << fixed(sum_cwd / n_ok) << '\n'
                    << "pk between\t" << fixed(sum_between / n_ok) << '\n';
                if (!a.no_timings && total.split_ms > 0)
                    out << "time ratio " << a.compare << "/" << to_string(run_cfg.splitter) << "\t"
                        << fixed(total_compare / total.split_ms, 2) << '\n';
            }
        }
        if (!a.no_timings)
            out << "split ms\t" << fixed(total.split_ms, 1) << '\n'
                << "precompute ms\t" << fixed(total.precompute_ms, 1) << '\n';
    }
    if (ok == 0) throw DataError("every document failed");
    return 0;
}

// ---------------------------------------------------------------------------
// gen, idf, audit

struct GenArgs {
    std::string corpus;
    std::string out_dir;
    std::string style = "sentence_concat";
    std::string corpus_format = "lines";
    std::size_t n_min = 3;
    std::size_t n_max = 11;
    std::size_t segments = 10;
    std::size_t documents = 400;
};

int cmd_gen(const RunConfig& cfg, const GenArgs& a, std::ostream& out) {
    DatasetSpec spec;
    spec.style = dataset_style_from_string(a.style);
    spec.n_min = a.n_min;
    spec.n_max = a.n_max;
    spec.num_segments = a.segments;
    spec.num_documents = a.documents;
    spec.seed = cfg.seed;
    spec.validate();
    const Level level = spec.style == DatasetStyle::sentence_concat ? Level::sentence : Level::word;
    const auto corpus =
        read_corpus(a.corpus, level, a.corpus_format == "text" ? CorpusFormat::text : CorpusFormat::lines);
    const auto docs = generate_dataset(corpus, spec);
    std::vector<std::string> ids;
    for (const auto& d : corpus) ids.push_back(d.id);
    const Manifest m = write_dataset(a.out_dir, spec, ids, docs);
    out << "documents\t" << m.stats.documents << '\n'
        << "elements\t" << m.stats.total_elements << '\n'
        << "unique elements\t" << m.stats.unique_elements << '\n'
        << "unique segment-initial elements\t" << m.stats.unique_segment_initial << '\n';
    return 0;
}

struct IdfArgs {
    std::string corpus;
    std::string output;
};

int cmd_idf(const RunConfig& cfg, const IdfArgs& a, std::ostream& out) {
    auto corpus = read_corpus(a.corpus, Level::word, CorpusFormat::text);
    if (cfg.stem)
        for (auto& d : corpus)
            for (auto& el : d.elements) el.front() = porter_stem(el.front());
    const IdfTable table = compute_idf(corpus);
    Sink sink(a.output, out);
    write_idf(*sink, table);
    if (!a.output.empty() && a.output != "-")
        out << "documents\t" << table.num_documents << '\n' << "words\t" << table.df.size() << '\n';
    return 0;
}

struct AuditArgs {
    std::string dataset;
    std::size_t folds = 10;
    bool json = false;
};

int cmd_audit(const AuditArgs& a, std::ostream& out) {
    if (a.folds < 2) throw UsageError("cross-validation needs at least 2 folds");
    const auto docs = read_dataset(a.dataset);
    if (docs.empty()) throw DataError("dataset " + a.dataset + " has no documents");
    const auto r = cross_validated_audit(docs, a.folds);
    if (a.json) {
        out << json{{"dataset", a.dataset},
                    {"folds", a.folds},
                    {"documents", r.documents},
                    {"precision", r.precision()},
                    {"recall", r.recall()},
                    {"accuracy", r.accuracy()},
                    {"mean_pk", r.mean_pk},
                    {"true_positive", r.true_positive},
                    {"false_positive", r.false_positive},
                    {"false_negative", r.false_negative},
                    {"true_negative", r.true_negative}}
                   .dump()
            << '\n';
    } else {
        out << "documents\t" << r.documents << '\n'
            << "folds\t" << a.folds << '\n'
            << "precision\t" << fixed(r.precision()) << '\n'
            << "recall\t" << fixed(r.recall()) << '\n'
            << "accuracy\t" << fixed(r.accuracy()) << '\n'
            << "mean pk\t" << fixed(r.mean_pk) << '\n';
    }
    return 0;
}

}  // namespace

std::vector<TokenizedDocument> read_corpus(const std::filesystem::path& dir, Level level, CorpusFormat format) {
    std::vector<TokenizedDocument> docs;
    for (const auto& path : corpus_files(dir)) {
        RawDocument raw{path.stem().string(), read_file(path)};
        if (trim(raw.text).empty()) {
            log::warn("skipping empty corpus file " + path.string());
            continue;
        }
        if (level == Level::word) {
            docs.push_back(tokenize_words(raw));
        } else if (format == CorpusFormat::text) {
            docs.push_back(split_sentences(raw));
        } else {
            std::vector<TokenList> elements;
            std::istringstream in(raw.text);
            for (std::string line; std::getline(in, line);) {
                if (trim(line).empty() || trim(line) == kChoiDelimiter) continue;
                std::istringstream fields(line);
                TokenList tokens;
                for (std::string t; fields >> t;) tokens.push_back(std::move(t));
                elements.push_back(std::move(tokens));
            }
            docs.push_back(make_document(raw.id, Level::sentence, std::move(elements)));
        }
    }
    if (docs.empty()) throw DataError("corpus " + dir.string() + " has no usable documents");
    return docs;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Text segmentation toolkit", "textseg"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    add_run_options(app, o);

    SegmentArgs seg_args;
    auto* seg = app.add_subcommand("segment", "split a document into segments");
    seg->add_option("input", seg_args.input, "text or reference-format file")->required();
    seg->add_option("-o,--output", seg_args.output, "boundary report file (default stdout)");
    seg->add_option("--input-format", seg_args.input_format, "auto, text or choi")
        ->check(CLI::IsMember({"auto", "text", "choi"}));
    seg->add_option("--annotate", seg_args.annotate, "none, ansi or html")->check(CLI::IsMember({"none", "ansi", "html"}));
    seg->add_option("--annotate-output", seg_args.annotate_output, "annotated rendering file (default stdout)");
    seg->add_flag("--json", seg_args.json, "JSON report");

    EvaluateArgs ev_args;
    auto* ev = app.add_subcommand("evaluate", "score a hypothesis against a reference");
    ev->add_option("reference", ev_args.reference)->required();
    ev->add_option("hypothesis", ev_args.hypothesis)->required();
    auto* ev_k = ev->add_option("--probe", ev_args.k, "probe distance (default from the reference)")
                     ->check(CLI::PositiveNumber);
    ev->add_flag("--json", ev_args.json, "JSON record");

    BenchmarkArgs bm_args;
    auto* bm = app.add_subcommand("benchmark", "segment every document of a generated dataset");
    bm->add_option("dataset", bm_args.dataset, "directory with manifest.json")->required();
    bm->add_option("--records", bm_args.records, "per-document JSON lines (default stdout)");
    bm->add_option("--summary", bm_args.summary, "summary JSON file");
    bm->add_option("--compare", bm_args.compare, "second splitter run on the same scores")
        ->check(CLI::IsMember({"greedy", "dp", "refine"}));
    bm->add_option("-j,--workers", bm_args.workers, "documents processed in parallel")->check(CLI::PositiveNumber);
    bm->add_option("--limit", bm_args.limit, "only the first N documents");
    bm->add_flag("--no-timings", bm_args.no_timings, "omit wall-clock fields (reproducible output)");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a synthetic dataset from a corpus");
    gen->add_option("corpus", gen_args.corpus, "directory of corpus documents")->required();
    gen->add_option("out", gen_args.out_dir, "output directory")->required();
    gen->add_option("--style", gen_args.style, "sentence_concat or word_chunk")
        ->check(CLI::IsMember({"sentence_concat", "word_chunk", "sentence", "word"}));
    gen->add_option("--corpus-format", gen_args.corpus_format, "lines or text")
        ->check(CLI::IsMember({"lines", "text"}));
    gen->add_option("--min", gen_args.n_min, "shortest segment");
    gen->add_option("--max", gen_args.n_max, "longest segment");
    gen->add_option("--num-segments", gen_args.segments, "segments per document");
    gen->add_option("--documents", gen_args.documents, "documents to generate");

    IdfArgs idf_args;
    auto* idf = app.add_subcommand("idf", "document frequencies of a corpus");
    idf->add_option("corpus", idf_args.corpus, "directory of corpus documents")->required();
    idf->add_option("output", idf_args.output, "idf file (default stdout)");

    AuditArgs au_args;
    auto* au = app.add_subcommand("audit", "boundary-memorization baseline with cross-validation");
    au->add_option("dataset", au_args.dataset)->required();
    au->add_option("--folds", au_args.folds, "number of folds");
    au->add_flag("--json", au_args.json, "JSON record");

    auto* pr = app.add_subcommand("presets", "list the named configurations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
    }

    log::set_level(o.quiet ? log::Level::quiet : o.verbose ? log::Level::info : log::Level::warning);
    try {
        const RunConfig cfg = build_config(o);
        if (seg->parsed()) return cmd_segment(cfg, seg_args, out);
        if (ev->parsed()) return cmd_evaluate(cfg, ev_args, ev_k, out);
        if (bm->parsed()) return cmd_benchmark(cfg, bm_args, out);
        if (gen->parsed()) return cmd_gen(cfg, gen_args, out);
        if (idf->parsed()) return cmd_idf(cfg, idf_args, out);
        if (au->parsed()) return cmd_audit(au_args, out);
        if (pr->parsed()) {
            for (const auto& p : presets()) out << p.name << '\t' << p.description << '\n';
            return 0;
        }
    } catch (const UsageError& e) {
        err << "textseg: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    } catch (const std::invalid_argument& e) {
        err << "textseg: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    } catch (const DataError& e) {
        err << "textseg: " << e.what() << '\n';
        return static_cast<int>(ExitCode::data);
    } catch (const std::filesystem::filesystem_error& e) {
        err << "textseg: " << e.what() << '\n';
        return static_cast<int>(ExitCode::data);
    } catch (const json::exception& e) {
        err << "textseg: " << e.what() << '\n';
        return static_cast<int>(ExitCode::data);
    } catch (const std::exception& e) {
        err << "textseg: internal error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::internal);
    }
    return static_cast<int>(ExitCode::usage);
}

}  // namespace textseg::cli
