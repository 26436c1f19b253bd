#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textseg/choi_format.hpp"
#include "textseg/segmentation.hpp"
#include "textseg/text_prep.hpp"

namespace textseg {

/// Where one segment of a generated document came from: elements
/// [begin, end) of corpus document `doc_id`.
struct SourceSpan {
    std::string doc_id;
    std::size_t begin = 0;
    std::size_t end = 0;

    bool operator==(const SourceSpan&) const = default;
};

struct LabeledDocument {
    TokenizedDocument doc;
    Segmentation reference;
    std::vector<SourceSpan> sources;
};

enum class DatasetStyle { sentence_concat, word_chunk };

std::string_view to_string(DatasetStyle style);
DatasetStyle dataset_style_from_string(std::string_view name);

struct DatasetSpec {
    DatasetStyle style = DatasetStyle::sentence_concat;
    std::size_t n_min = 3;
    std::size_t n_max = 11;
    std::size_t num_segments = 10;
    std::size_t num_documents = 400;
    std::uint64_t seed = 1;

    void validate() const;
};

/// Each output document joins `num_segments` segments; segment t is the first
/// n_t elements of a corpus document, with the sources of one output document
/// drawn without replacement and each n_t drawn independently from
/// [n_min, n_max]. Draw order per document: the sources, then n_1 .. n_K.
std::vector<LabeledDocument> gen_sentence_concat(std::span<const TokenizedDocument> corpus, const DatasetSpec& spec);

/// Each segment is a run of n ~ U[n_min, n_max] consecutive words starting at
/// a uniform offset of a uniformly chosen corpus document (with replacement).
/// Documents shorter than n_max are skipped with a warning. Draw order per
/// segment: document, length, offset.
std::vector<LabeledDocument> gen_word_chunk(std::span<const TokenizedDocument> corpus, const DatasetSpec& spec);

std::vector<LabeledDocument> generate_dataset(std::span<const TokenizedDocument> corpus, const DatasetSpec& spec);

/// Word-level files are wrapped at this many tokens per line.
inline constexpr std::size_t kWordsPerLine = 20;

ChoiDocument to_choi(const LabeledDocument& doc);
/// Sentence level: one element per line, tokens split on whitespace as-is.
/// Word level: every token of every line is an element.
LabeledDocument from_choi(const ChoiDocument& choi, std::string id, Level level);

void write_reference_file(const LabeledDocument& doc, const std::filesystem::path& path);
LabeledDocument read_reference_file(const std::filesystem::path& path, Level level = Level::sentence);

struct DatasetStats {
    std::size_t documents = 0;
    std::size_t total_elements = 0;
    std::size_t unique_elements = 0;
    std::size_t unique_segment_initial = 0;
};

DatasetStats dataset_stats(std::span<const LabeledDocument> docs);

/// Boundary-memorization baseline: predicts a boundary before every test
/// element that starts a segment somewhere in `train`. Positions 1 .. N-1 of
/// each test document are classified as boundary / no boundary.
struct AuditReport {
    std::size_t true_positive = 0;
    std::size_t false_positive = 0;
    std::size_t false_negative = 0;
    std::size_t true_negative = 0;
    double mean_pk = 0.0;
    std::size_t documents = 0;

    double precision() const;
    double recall() const;
    double accuracy() const;
};

AuditReport leakage_audit(std::span<const LabeledDocument> train, std::span<const LabeledDocument> test);

/// Document i goes to fold i % folds. Requires folds >= 2.
AuditReport cross_validated_audit(std::span<const LabeledDocument> docs, std::size_t folds);

/// Dataset directory layout: manifest.json plus one reference file per document.
inline constexpr std::string_view kManifestName = "manifest.json";

struct ManifestEntry {
    std::string file;
    Segmentation reference;
    std::vector<SourceSpan> sources;
};

struct Manifest {
    DatasetSpec spec;
    Level level = Level::sentence;
    std::string generator;
    std::vector<std::string> corpus_ids;
    std::vector<ManifestEntry> documents;
    DatasetStats stats;
};

/// Writes every document as NNNN.ref plus the manifest.
Manifest write_dataset(const std::filesystem::path& dir, const DatasetSpec& spec,
                       std::span<const std::string> corpus_ids, std::span<const LabeledDocument> docs);
Manifest read_manifest(const std::filesystem::path& dir);

/// Reads the documents listed in the manifest, checking each file's
/// boundaries against the manifest.
std::vector<LabeledDocument> read_dataset(const std::filesystem::path& dir, Manifest* manifest = nullptr);

}  // namespace textseg
