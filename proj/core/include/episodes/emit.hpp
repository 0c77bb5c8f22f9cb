#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "episodes/label.hpp"
#include "episodes/scanner.hpp"
#include "episodes/store.hpp"

namespace episodes {

enum class Format { text, jsonl };

/// `freq=<n> nodes=[...] edges=[...]`, with the frequency under `measure`.
std::string format_text(const EpisodeRecord& record, const Alphabet& alphabet, Measure measure);

/// One JSON object with keys nodes, edges, freq_fixed, freq_disjoint and
/// closed_kind; keys are written in that order.
std::string format_jsonl(const EpisodeRecord& record, const Alphabet& alphabet, std::string_view closed_kind);

/// Writes one line per record in the given order.
void emit(std::ostream& out, std::span<const EpisodeRecord> records, const Alphabet& alphabet, Format format,
          Measure measure, std::string_view closed_kind);

struct JsonRecord {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint64_t freq_fixed = 0;
  std::uint64_t freq_disjoint = 0;
  std::string closed_kind;

  friend bool operator==(const JsonRecord&, const JsonRecord&) = default;
};

/// Inverse of format_jsonl. Throws ParseError.
JsonRecord parse_jsonl(std::string_view line);

}  // namespace episodes
