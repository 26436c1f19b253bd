#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace textseg {

/// Granularity of the elements a document is split into.
enum class Level { sentence, word, character };

std::string_view to_string(Level level);
Level level_from_string(std::string_view name);

struct RawDocument {
    std::string id;
    std::string text;
};

/// Byte range of an element inside the raw text it was read from.
struct TextSpan {
    std::size_t offset = 0;
    std::size_t length = 0;

    std::size_t end() const { return offset + length; }
    bool operator==(const TextSpan&) const = default;
};

using TokenList = std::vector<std::string>;

/// Ordered elements of a document.
///
/// `kept_index_map[i]` is the index, in the document as first tokenized, of
/// the element now stored at position i. Preprocessing drops elements, so the
/// map lets boundaries found on the kept elements be reported against the
/// original numbering. `spans` is either empty or parallel to `elements`.
struct TokenizedDocument {
    std::string id;
    Level level = Level::sentence;
    std::vector<TokenList> elements;
    std::vector<std::size_t> kept_index_map;
    std::vector<TextSpan> spans;
    std::size_t source_element_count = 0;
    bool stemmed = false;

    std::size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }

    /// Throws DataError when an invariant is broken.
    void validate() const;

    bool operator==(const TokenizedDocument&) const = default;
};

/// Builds a document from already-split elements, with an identity index map.
TokenizedDocument make_document(std::string id, Level level, std::vector<TokenList> elements,
                                std::vector<TextSpan> spans = {});

/// Lowercases and puts whitespace around every non-alphanumeric character,
/// then splits on whitespace. Bytes >= 0x80 count as alphanumeric, so UTF-8
/// words survive intact.
TokenList word_tokens(std::string_view text);

/// Sentences end at '.', '!' or '?' followed by whitespace or end of text.
TokenizedDocument split_sentences(const RawDocument& doc);

TokenizedDocument tokenize_words(const RawDocument& doc);

/// One element per non-whitespace character (ASCII lowercased).
TokenizedDocument tokenize_chars(const RawDocument& doc);

/// One element per non-blank line, each tokenized with word_tokens.
TokenizedDocument tokenize_lines(const RawDocument& doc);

using StopwordSet = std::unordered_set<std::string>;

/// One token per line. Lines starting with '#' are comments; a leading
/// backslash escapes the next character (so "\#" is the token "#").
StopwordSet parse_stopwords(std::istream& in);
StopwordSet load_stopwords(const std::filesystem::path& path);

struct PreprocessOptions {
    bool remove_stopwords = false;
    bool stem = false;
    std::size_t min_element_tokens = 0;
    StopwordSet stopwords;
};

/// Removes stopwords, stems and drops short elements, in that order.
///
/// With both stemming and stopword removal on, a token is also dropped when
/// its stem is a stopword; this keeps the operation idempotent.
/// Throws DataError("no elements survive preprocessing") if nothing is left.
TokenizedDocument preprocess(const TokenizedDocument& doc, const PreprocessOptions& opts);

/// Lowercases ASCII letters.
std::string to_lower(std::string_view text);

}  // namespace textseg
