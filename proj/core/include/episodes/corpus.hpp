#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "episodes/sequence.hpp"

namespace episodes {

struct CorpusOptions {
  bool lowercase = false;
  bool strip_punctuation = false;
  std::optional<std::filesystem::path> stopword_file;  // one token per line
};

/// Splits on whitespace and applies the normalizations in `options`, then
/// drops empty tokens and tokens listed in `stopwords`. Stop words are
/// matched after the same normalization.
std::vector<std::string> tokenize(std::string_view text, const CorpusOptions& options,
                                  const std::unordered_set<std::string>& stopwords = {});

/// Reads a stop-word file; throws IoError when it cannot be opened.
std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path, const CorpusOptions& options);

/// Throws IoError when the file cannot be read and EmptySequenceError when
/// no token survives.
EventSequence load_sequence(const std::filesystem::path& path, const CorpusOptions& options = {});

}  // namespace episodes
