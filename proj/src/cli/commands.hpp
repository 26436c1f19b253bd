#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include "cli/config.hpp"
#include "textseg/text_prep.hpp"

namespace textseg::cli {

/// Runs the command line and returns the process exit status
/// (see ExitCode). Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

enum class CorpusFormat { lines, text };

/// Every regular file of `dir` (sorted by name, dot files skipped) as one
/// document. `lines`: one sentence per non-blank line, tokens split on
/// whitespace as-is. `text`: free text through split_sentences. At word level
/// the whole file goes through tokenize_words either way.
std::vector<TokenizedDocument> read_corpus(const std::filesystem::path& dir, Level level, CorpusFormat format);

}  // namespace textseg::cli
