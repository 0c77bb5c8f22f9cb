#include "episodes/emit.hpp"

#include <ostream>

#include "episodes/episode_io.hpp"
#include "episodes/errors.hpp"
#include "json.hpp"

namespace episodes {

std::string format_text(const EpisodeRecord& record, const Alphabet& alphabet, Measure measure) {
  return "freq=" + std::to_string(record.freq.get(measure)) + ' ' + to_string(record.episode, alphabet);
}

std::string format_jsonl(const EpisodeRecord& record, const Alphabet& alphabet, std::string_view closed_kind) {
  // ordered_json keeps insertion order, so output bytes depend only on input
  nlohmann::ordered_json j;
  auto& nodes = j["nodes"] = nlohmann::ordered_json::array();
  for (Label l : record.episode.labels()) nodes.push_back(alphabet.name(l));
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : record.episode.edges()) edges.push_back({e.source, e.target});
  j["freq_fixed"] = record.freq.fixed;
  j["freq_disjoint"] = record.freq.disjoint;
  j["closed_kind"] = closed_kind;
  return j.dump();
}

void emit(std::ostream& out, std::span<const EpisodeRecord> records, const Alphabet& alphabet, Format format,
          Measure measure, std::string_view closed_kind) {
  for (const EpisodeRecord& r : records) {
    out << (format == Format::text ? format_text(r, alphabet, measure) : format_jsonl(r, alphabet, closed_kind))
        << '\n';
  }
  if (!out) throw IoError("failed to write episodes");
}

JsonRecord parse_jsonl(std::string_view line) {
  try {
    const auto j = nlohmann::json::parse(line);
    JsonRecord r;
    r.nodes = j.at("nodes").get<std::vector<std::string>>();
    for (const auto& e : j.at("edges")) r.edges.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>());
    r.freq_fixed = j.at("freq_fixed").get<std::uint64_t>();
    r.freq_disjoint = j.at("freq_disjoint").get<std::uint64_t>();
    r.closed_kind = j.at("closed_kind").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed episode record: ") + e.what());
  }
}

}  // namespace episodes
