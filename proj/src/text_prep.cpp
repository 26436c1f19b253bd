#include "textseg/text_prep.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "textseg/error.hpp"
#include "textseg/porter.hpp"

namespace textseg {
namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_word_char(char c) {
    auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || (u >= '0' && u <= '9') || (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z');
}

char lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

struct Token {
    std::string text;
    TextSpan span;
};

// Word tokens of text[begin, end) with spans relative to the whole text.
std::vector<Token> scan_tokens(std::string_view text, std::size_t begin, std::size_t end) {
    std::vector<Token> out;
    std::size_t i = begin;
    while (i < end) {
        char c = text[i];
        if (is_space(c)) {
            ++i;
        } else if (is_word_char(c)) {
            std::size_t j = i;
            std::string word;
            while (j < end && is_word_char(text[j])) word.push_back(lower(text[j++]));
            out.push_back({std::move(word), {i, j - i}});
            i = j;
        } else {
            out.push_back({std::string(1, c), {i, 1}});
            ++i;
        }
    }
    return out;
}

bool all_space(std::string_view text) { return std::all_of(text.begin(), text.end(), is_space); }

void require_text(const RawDocument& doc) {
    if (all_space(doc.text)) throw DataError("empty document" + (doc.id.empty() ? "" : ": " + doc.id));
}

TokenList texts(const std::vector<Token>& tokens) {
    TokenList out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.text);
    return out;
}

}  // namespace

std::string_view to_string(Level level) {
    switch (level) {
        case Level::sentence: return "sentence";
        case Level::word: return "word";
        case Level::character: return "char";
    }
    return "sentence";
}

Level level_from_string(std::string_view name) {
    if (name == "sentence") return Level::sentence;
    if (name == "word") return Level::word;
    if (name == "char" || name == "character") return Level::character;
    throw std::invalid_argument("unknown level '" + std::string(name) + "'");
}

std::string to_lower(std::string_view text) {
    std::string out(text);
    for (char& c : out) c = lower(c);
    return out;
}

void TokenizedDocument::validate() const {
    if (kept_index_map.size() != elements.size())
        throw DataError("document '" + id + "': index map length differs from element count");
    if (!spans.empty() && spans.size() != elements.size())
        throw DataError("document '" + id + "': span count differs from element count");
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const auto& tok : elements[i])
            if (tok.empty()) throw DataError("document '" + id + "': empty token in element " + std::to_string(i));
        if (level != Level::sentence && elements[i].size() != 1)
            throw DataError("document '" + id + "': element " + std::to_string(i) + " of a " +
                            std::string(to_string(level)) + "-level document must hold one token");
        if (i > 0 && kept_index_map[i] <= kept_index_map[i - 1])
            throw DataError("document '" + id + "': index map is not strictly increasing");
    }
    if (!kept_index_map.empty() && kept_index_map.back() >= source_element_count)
        throw DataError("document '" + id + "': index map exceeds source element count");
}

TokenizedDocument make_document(std::string id, Level level, std::vector<TokenList> elements,
                                std::vector<TextSpan> spans) {
    TokenizedDocument doc;
    doc.id = std::move(id);
    doc.level = level;
    doc.source_element_count = elements.size();
    doc.kept_index_map.resize(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) doc.kept_index_map[i] = i;
    doc.elements = std::move(elements);
    doc.spans = std::move(spans);
    return doc;
}

TokenList word_tokens(std::string_view text) { return texts(scan_tokens(text, 0, text.size())); }

TokenizedDocument split_sentences(const RawDocument& doc) {
    require_text(doc);
    const std::string_view text = doc.text;
    std::vector<TokenList> elements;
    std::vector<TextSpan> spans;

    auto flush = [&](std::size_t begin, std::size_t end) {
        while (begin < end && is_space(text[begin])) ++begin;
        while (end > begin && is_space(text[end - 1])) --end;
        if (begin == end) return;
        elements.push_back(texts(scan_tokens(text, begin, end)));
        spans.push_back({begin, end - begin});
    };

    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if ((c == '.' || c == '!' || c == '?') && (i + 1 == text.size() || is_space(text[i + 1]))) {
            flush(start, i + 1);
            start = i + 1;
        }
    }
    flush(start, text.size());
    return make_document(doc.id, Level::sentence, std::move(elements), std::move(spans));
}

TokenizedDocument tokenize_words(const RawDocument& doc) {
    require_text(doc);
    auto tokens = scan_tokens(doc.text, 0, doc.text.size());
    std::vector<TokenList> elements;
    std::vector<TextSpan> spans;
    elements.reserve(tokens.size());
    spans.reserve(tokens.size());
    for (auto& t : tokens) {
        elements.push_back({std::move(t.text)});
        spans.push_back(t.span);
    }
    return make_document(doc.id, Level::word, std::move(elements), std::move(spans));
}

TokenizedDocument tokenize_chars(const RawDocument& doc) {
    require_text(doc);
    std::vector<TokenList> elements;
    std::vector<TextSpan> spans;
    for (std::size_t i = 0; i < doc.text.size(); ++i) {
        if (is_space(doc.text[i])) continue;
        elements.push_back({std::string(1, lower(doc.text[i]))});
        spans.push_back({i, 1});
    }
    return make_document(doc.id, Level::character, std::move(elements), std::move(spans));
}

TokenizedDocument tokenize_lines(const RawDocument& doc) {
    require_text(doc);
    const std::string_view text = doc.text;
    std::vector<TokenList> elements;
    std::vector<TextSpan> spans;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::size_t b = pos, e = nl;
        while (b < e && is_space(text[b])) ++b;
        while (e > b && is_space(text[e - 1])) --e;
        if (b < e) {
            elements.push_back(texts(scan_tokens(text, b, e)));
            spans.push_back({b, e - b});
        }
        pos = nl + 1;
    }
    return make_document(doc.id, Level::sentence, std::move(elements), std::move(spans));
}

StopwordSet parse_stopwords(std::istream& in) {
    StopwordSet out;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t b = 0, e = line.size();
        while (b < e && is_space(line[b])) ++b;
        while (e > b && is_space(line[e - 1])) --e;
        if (b == e || line[b] == '#') continue;
        if (line[b] == '\\') ++b;
        if (b < e) out.insert(to_lower(std::string_view(line).substr(b, e - b)));
    }
    return out;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open stopword file " + path.string());
    return parse_stopwords(in);
}

TokenizedDocument preprocess(const TokenizedDocument& doc, const PreprocessOptions& opts) {
    TokenizedDocument out;
    out.id = doc.id;
    out.level = doc.level;
    out.source_element_count = doc.source_element_count;
    const bool stem_now = opts.stem && !doc.stemmed;
    out.stemmed = doc.stemmed || opts.stem;

    auto is_stop = [&](const std::string& tok, const std::string& stem) {
        if (!opts.remove_stopwords) return false;
        return opts.stopwords.contains(tok) || (stem_now && opts.stopwords.contains(stem));
    };

    for (std::size_t i = 0; i < doc.elements.size(); ++i) {
        TokenList kept;
        kept.reserve(doc.elements[i].size());
        for (const auto& tok : doc.elements[i]) {
            std::string stem = stem_now ? porter_stem(tok) : tok;
            if (is_stop(tok, stem)) continue;
            kept.push_back(stem_now ? std::move(stem) : tok);
        }
        if (kept.size() < opts.min_element_tokens) continue;
        // A zero threshold keeps elements whose tokens were all removed only
        // at sentence level; word-level elements must keep their one token.
        if (kept.empty() && doc.level != Level::sentence) continue;
        out.elements.push_back(std::move(kept));
        out.kept_index_map.push_back(doc.kept_index_map[i]);
        if (!doc.spans.empty()) out.spans.push_back(doc.spans[i]);
    }
    if (out.elements.empty()) throw DataError("no elements survive preprocessing" + (doc.id.empty() ? "" : ": " + doc.id));
    return out;
}

}  // namespace textseg
