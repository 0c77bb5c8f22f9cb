#include "episodes/episode_io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "episodes/errors.hpp"

namespace episodes {

std::string to_string(const Episode& episode, const Alphabet& alphabet) {
  std::string out = "nodes=[";
  for (NodeId v = 0; v < episode.size(); ++v) {
    if (v) out += ',';
    out += alphabet.name(episode.label(v));
  }
  out += "] edges=[";
  bool first = true;
  for (const Edge& e : episode.edges()) {
    if (!first) out += ',';
    first = false;
    out += '(' + std::to_string(e.source) + ',' + std::to_string(e.target) + ')';
  }
  out += ']';
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) {
      throw ParseError("expected '" + std::string(token) + "' at offset " + std::to_string(pos_) + " in '" +
                       std::string(text_) + "'");
    }
    pos_ += token.size();
  }

  std::string_view symbol() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) throw ParseError("empty node label at offset " + std::to_string(start));
    return text_.substr(start, pos_ - start);
  }

  NodeId number() {
    skip_space();
    NodeId value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) throw ParseError("expected node id at offset " + std::to_string(pos_));
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  bool done() {
    skip_space();
    return pos_ == text_.size();
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Episode parse_episode(std::string_view text, const Alphabet& alphabet) {
  Cursor in(text);
  std::vector<Label> labels;
  std::vector<Edge> edges;

  in.expect("nodes=[");
  if (!in.peek(']')) {
    do {
      labels.push_back(alphabet.at(in.symbol()));
    } while (in.peek(',') && (in.expect(","), true));
  }
  in.expect("]");
  in.expect("edges=[");
  if (!in.peek(']')) {
    do {
      in.expect("(");
      Edge e;
      e.source = in.number();
      in.expect(",");
      e.target = in.number();
      in.expect(")");
      if (e.source >= labels.size() || e.target >= labels.size()) {
        throw ParseError("edge (" + std::to_string(e.source) + "," + std::to_string(e.target) +
                         ") refers to a missing node");
      }
      edges.push_back(e);
    } while (in.peek(',') && (in.expect(","), true));
  }
  in.expect("]");
  if (!in.done()) throw ParseError("trailing characters after episode literal");
  return Episode::canonicalize(labels, edges);
}

}  // namespace episodes
