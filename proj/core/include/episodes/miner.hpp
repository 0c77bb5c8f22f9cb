#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "episodes/closure.hpp"
#include "episodes/episode.hpp"
#include "episodes/scanner.hpp"
#include "episodes/sequence.hpp"
#include "episodes/store.hpp"

namespace episodes {

struct MiningConfig {
  Position window = 0;
  std::uint64_t min_freq = 0;
  Measure measure = Measure::fixed;
  std::optional<std::size_t> max_nodes;
  ClosureMode closure = ClosureMode::instance;
  bool add_intermediate = true;  // off only to show what the patch buys
  unsigned threads = 1;          // 0 picks the hardware concurrency

  /// Throws ConfigError unless window >= 1 and min_freq >= 1.
  void validate() const;
};

struct LevelReport {
  std::size_t nodes = 0;
  std::size_t candidates = 0;
  std::size_t discovered = 0;
  std::size_t intermediates = 0;
  double elapsed_ms = 0;
};

struct MiningResult {
  // Distinct closures of discovered episodes with at most max_nodes nodes,
  // i.e. every frequent i-closed (or e-closed) episode within the cap.
  std::vector<EpisodeRecord> closed;
  // Episodes within the cap with no strict superepisode within the cap of
  // equal frequency.
  std::vector<EpisodeRecord> f_closed;
  std::vector<LevelReport> levels;
  std::size_t discovered = 0;
  std::size_t intermediates = 0;
};

/// Order of checks: every proper skeleton edge e needs G - e stored and
/// not implying e through its closure; every node without a proper skeleton
/// edge needs G - v stored, and a solitary v must not be implied by the
/// closure of G - v.
bool test_candidate(const Episode& g, const EpisodeStore& store);

/// Episodes strictly between g and its closure that later candidates need
/// as parents. All of them share g's minimal windows and closure.
std::vector<Episode> add_intermediate(const Episode& g, const Episode& closure);

/// Drops every record that is a strict subepisode of another record with
/// equal frequency under `measure`. Records must be distinct.
std::vector<EpisodeRecord> f_closure_filter(std::span<const EpisodeRecord> closed, Measure measure);

MiningResult mine(const EventSequence& seq, const MiningConfig& config);

/// Output order: node count, edge count, labels, edges.
void sort_records(std::vector<EpisodeRecord>& records);

}  // namespace episodes
