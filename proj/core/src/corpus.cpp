#include "episodes/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "episodes/errors.hpp"

namespace episodes {
namespace {

std::string normalize(std::string tok, const CorpusOptions& options) {
  if (options.strip_punctuation) {
    std::erase_if(tok, [](char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; });
  }
  if (options.lowercase) {
    std::ranges::transform(tok, tok.begin(), [](char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); });
  }
  return tok;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buf.str();
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, const CorpusOptions& options,
                                  const std::unordered_set<std::string>& stopwords) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t from = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (from == i) break;
    std::string tok = normalize(std::string(text.substr(from, i - from)), options);
    if (!tok.empty() && !stopwords.contains(tok)) out.push_back(std::move(tok));
  }
  return out;
}

std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path, const CorpusOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stop-word file " + path.string());
  std::unordered_set<std::string> out;
  for (std::string line; std::getline(in, line);) {
    for (auto& tok : tokenize(line, options)) out.insert(std::move(tok));
  }
  return out;
}

EventSequence load_sequence(const std::filesystem::path& path, const CorpusOptions& options) {
  std::unordered_set<std::string> stopwords;
  if (options.stopword_file) stopwords = load_stopwords(*options.stopword_file, options);
  const auto tokens = tokenize(read_file(path), options, stopwords);
  if (tokens.empty()) throw EmptySequenceError(path.string() + " contains no events");
  return EventSequence::from_tokens(tokens);
}

}  // namespace episodes
