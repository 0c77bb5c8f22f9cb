#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "episodes/episode.hpp"
#include "episodes/scanner.hpp"

namespace episodes {

struct EpisodeRecord {
  Episode episode;
  Episode iclosure;
  Frequencies freq;
  // Inserted by AddIntermediate rather than by a frequency test.
  bool intermediate = false;
};

/// The discovered episodes, keyed by canonical form. Records are never
/// removed, so indices stay valid.
class EpisodeStore {
 public:
  using Level = std::pair<std::size_t, std::size_t>;  // (nodes, edges)

  /// Returns the index of the record for `record.episode` and whether it was
  /// newly inserted. An existing record is left untouched.
  std::pair<std::size_t, bool> insert(EpisodeRecord record);

  [[nodiscard]] const EpisodeRecord* find(const Episode& episode) const;
  [[nodiscard]] bool contains(const Episode& episode) const { return index_.contains(episode); }

  [[nodiscard]] const EpisodeRecord& at(std::size_t i) const { return records_[i]; }
  [[nodiscard]] std::span<const EpisodeRecord> records() const { return records_; }
  [[nodiscard]] std::size_t size() const { return records_.size(); }
  [[nodiscard]] bool empty() const { return records_.empty(); }

  /// Indices of records with exactly this many nodes and edges.
  [[nodiscard]] std::span<const std::size_t> level(std::size_t nodes, std::size_t edges) const;

  /// Indices of records with this label multiset (sorted label list).
  [[nodiscard]] std::span<const std::size_t> with_labels(std::span<const Label> labels) const;

  /// Largest edge count among records with `nodes` nodes, if any.
  [[nodiscard]] std::optional<std::size_t> max_edges(std::size_t nodes) const;
  [[nodiscard]] std::size_t max_nodes() const;

 private:
  std::vector<EpisodeRecord> records_;
  std::unordered_map<Episode, std::size_t, EpisodeHash> index_;
  std::map<Level, std::vector<std::size_t>> levels_;
  std::map<std::vector<Label>, std::vector<std::size_t>> by_labels_;
};

}  // namespace episodes
