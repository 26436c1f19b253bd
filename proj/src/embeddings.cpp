#include "textseg/embeddings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "textseg/error.hpp"
#include "textseg/log.hpp"

namespace textseg {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

std::vector<double> normalized(std::span<const double> v) {
    std::vector<double> out(v.begin(), v.end());
    const double n = norm(v);
    if (n > 0.0)
        for (double& x : out) x /= n;
    return out;
}

EmbeddingTable::EmbeddingTable(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("embedding dimension must be positive");
}

bool EmbeddingTable::set(std::string word, std::span<const double> vec) {
    if (vec.size() != dim_)
        throw std::invalid_argument("vector for '" + word + "' has dimension " + std::to_string(vec.size()) +
                                    ", table has " + std::to_string(dim_));
    if (auto it = index_.find(word); it != index_.end()) {
        std::copy(vec.begin(), vec.end(), data_.begin() + static_cast<std::ptrdiff_t>(it->second * dim_));
        return false;
    }
    index_.emplace(word, words_.size());
    words_.push_back(std::move(word));
    data_.insert(data_.end(), vec.begin(), vec.end());
    return true;
}

bool EmbeddingTable::contains(std::string_view word) const { return index_.find(word) != index_.end(); }

std::optional<std::span<const double>> EmbeddingTable::find(std::string_view word) const {
    auto it = index_.find(word);
    if (it == index_.end()) return std::nullopt;
    return vector(it->second);
}

EmbeddingTable parse_embeddings(std::istream& in, const std::string& source,
                                const std::unordered_set<std::string>* vocabulary) {
    EmbeddingTable table;
    std::size_t dim = 0;
    std::string line;
    std::size_t line_no = 0;
    std::vector<double> values;
    std::vector<std::string_view> fields;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        fields.clear();
        std::string_view rest = line;
        while (!rest.empty()) {
            std::size_t sp = rest.find(' ');
            std::string_view f = rest.substr(0, sp);
            if (!f.empty()) fields.push_back(f);
            if (sp == std::string_view::npos) break;
            rest.remove_prefix(sp + 1);
        }
        if (fields.size() < 2) throw DataError(source + ":" + std::to_string(line_no) + ": expected a word and its vector");
        const std::size_t d = fields.size() - 1;
        if (dim == 0) {
            dim = d;
            table = EmbeddingTable(dim);
        } else if (d != dim) {
            throw DataError(source + ":" + std::to_string(line_no) + ": vector has dimension " + std::to_string(d) +
                            ", expected " + std::to_string(dim));
        }
        std::string word(fields[0]);
        if (vocabulary && !vocabulary->contains(word)) continue;
        values.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const auto f = fields[i + 1];
            auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), values[i]);
            if (ec != std::errc() || ptr != f.data() + f.size())
                throw DataError(source + ":" + std::to_string(line_no) + ": bad number '" + std::string(f) + "'");
        }
        if (!table.set(word, values))
            log::warn(source + ":" + std::to_string(line_no) + ": duplicate word '" + word + "', keeping the last vector");
    }
    if (dim == 0) throw DataError(source + ": no vectors");
    return table;
}

EmbeddingTable load_embeddings(const std::filesystem::path& path, const std::unordered_set<std::string>* vocabulary) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open embedding file " + path.string());
    return parse_embeddings(in, path.string(), vocabulary);
}

void write_embeddings(std::ostream& out, const EmbeddingTable& table) {
    char buf[64];
    for (std::size_t i = 0; i < table.size(); ++i) {
        out << table.words()[i];
        for (double x : table.vector(i)) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
            out << ' ' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
        }
        out << '\n';
    }
}

double IdfTable::idf(std::string_view word) const {
    std::size_t d = 1;
    if (auto it = df.find(std::string(word)); it != df.end()) d = it->second;
    return std::log(static_cast<double>(num_documents) / static_cast<double>(d));
}

IdfTable compute_idf(std::span<const TokenizedDocument> corpus) {
    if (corpus.empty()) throw DataError("cannot compute idf over an empty corpus");
    IdfTable table;
    table.num_documents = corpus.size();
    for (const auto& doc : corpus) {
        std::set<std::string_view> seen;
        for (const auto& el : doc.elements)
            for (const auto& tok : el) seen.insert(tok);
        for (auto w : seen) ++table.df[std::string(w)];
    }
    return table;
}

void write_idf(std::ostream& out, const IdfTable& table) {
    out << "#documents " << table.num_documents << '\n';
    std::map<std::string_view, std::size_t> sorted(table.df.begin(), table.df.end());
    for (const auto& [w, d] : sorted) out << w << ' ' << d << '\n';
}

IdfTable parse_idf(std::istream& in, const std::string& source) {
    IdfTable table;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        if (!header) {
            std::string tag;
            long long n = 0;
            if (!(fields >> tag >> n) || tag != "#documents" || n <= 0)
                throw DataError(source + ":" + std::to_string(line_no) + ": expected header '#documents N'");
            table.num_documents = static_cast<std::size_t>(n);
            header = true;
            continue;
        }
        std::string word;
        long long d = 0;
        if (!(fields >> word >> d))
            throw DataError(source + ":" + std::to_string(line_no) + ": expected 'word df'");
        if (d < 1 || static_cast<std::size_t>(d) > table.num_documents)
            throw DataError(source + ":" + std::to_string(line_no) + ": df out of range for '" + word + "'");
        table.df[word] = static_cast<std::size_t>(d);
    }
    if (!header) throw DataError(source + ": missing '#documents N' header");
    return table;
}

IdfTable load_idf(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open idf file " + path.string());
    return parse_idf(in, path.string());
}

namespace {

// Sum without the final normalization step; returns the number of tokens found.
std::size_t accumulate_element(std::span<const std::string> tokens, const EmbeddingTable& table, const IdfTable* idf,
                               const RepresentationConfig& cfg, std::vector<double>& out, std::size_t* oov) {
    if (cfg.weighting == Weighting::tfidf && idf == nullptr)
        throw std::invalid_argument("tfidf weighting requires an idf table");
    out.assign(table.dim(), 0.0);
    std::size_t found = 0;
    for (const auto& tok : tokens) {
        auto vec = table.find(tok);
        if (!vec) {
            if (cfg.oov_policy == OovPolicy::error) throw DataError("token '" + tok + "' has no vector");
            if (oov) ++*oov;
            continue;
        }
        ++found;
        double weight = cfg.weighting == Weighting::tfidf ? idf->idf(tok) : 1.0;
        if (cfg.normalize_word_vectors) {
            const double n = norm(*vec);
            if (n == 0.0) continue;
            weight /= n;
        }
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += weight * (*vec)[k];
    }
    return found;
}

}  // namespace

std::vector<double> element_vector(std::span<const std::string> tokens, const EmbeddingTable& table,
                                   const IdfTable* idf, const RepresentationConfig& cfg) {
    std::vector<double> out;
    if (accumulate_element(tokens, table, idf, cfg, out, nullptr) == 0) throw DataError("empty element representation");
    if (cfg.normalize_element_vectors) {
        const double n = norm(out);
        if (n == 0.0) throw DataError("element vector has zero norm");
        for (double& x : out) x /= n;
    }
    return out;
}

ElementMatrix build_element_matrix(const TokenizedDocument& doc, const EmbeddingTable& table, const IdfTable* idf,
                                   const RepresentationConfig& cfg, RepresentationStats* stats) {
    ElementMatrix m(doc.size(), table.dim());
    RepresentationStats local;
    std::vector<double> row;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        std::size_t found = 0;
        try {
            found = accumulate_element(doc.elements[i], table, idf, cfg, row, &local.oov_tokens);
        } catch (const DataError& e) {
            throw DataError("document '" + doc.id + "', element " + std::to_string(i) + ": " + e.what());
        }
        if (found == 0)
            throw DataError("document '" + doc.id + "', element " + std::to_string(i) + ": empty element representation");
        if (cfg.normalize_element_vectors) {
            const double n = norm(row);
            if (n == 0.0) {
                ++local.zero_rows;
                log::warn("document '" + doc.id + "', element " + std::to_string(i) + ": zero vector left unnormalized");
            } else {
                for (double& x : row) x /= n;
            }
        }
        std::copy(row.begin(), row.end(), m.row(i).begin());
    }
    if (stats) *stats = local;
    return m;
}

ElementMatrix bag_of_words_matrix(const TokenizedDocument& doc) {
    std::map<std::string_view, std::size_t> vocab;
    for (const auto& el : doc.elements)
        for (const auto& tok : el) vocab.emplace(tok, 0);
    std::size_t col = 0;
    for (auto& [w, c] : vocab) c = col++;
    ElementMatrix m(doc.size(), std::max<std::size_t>(vocab.size(), 1));
    for (std::size_t i = 0; i < doc.size(); ++i)
        for (const auto& tok : doc.elements[i]) m(i, vocab.at(tok)) += 1.0;
    return m;
}

std::vector<double> topic_histogram(std::span<const std::string> tokens, const TopicClustering& clustering) {
    std::vector<double> h(clustering.k, 0.0);
    for (const auto& tok : tokens)
        if (auto it = clustering.assignment.find(tok); it != clustering.assignment.end()) h[it->second] += 1.0;
    return h;
}

ElementMatrix topic_histogram_matrix(const TokenizedDocument& doc, const TopicClustering& clustering) {
    ElementMatrix m(doc.size(), clustering.k);
    for (std::size_t i = 0; i < doc.size(); ++i) {
        auto h = topic_histogram(doc.elements[i], clustering);
        std::copy(h.begin(), h.end(), m.row(i).begin());
    }
    return m;
}

}  // namespace textseg
