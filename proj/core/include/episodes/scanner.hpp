#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "episodes/episode.hpp"
#include "episodes/sequence.hpp"

namespace episodes {

/// f(v) for every node v of an episode, as 1-based sequence positions.
using MappingVector = std::vector<Position>;

enum class Measure { fixed, disjoint };

struct Frequencies {
  std::uint64_t fixed = 0;
  std::uint64_t disjoint = 0;

  [[nodiscard]] std::uint64_t get(Measure m) const { return m == Measure::fixed ? fixed : disjoint; }
  friend bool operator==(const Frequencies&, const Frequencies&) = default;
};

struct ScanStats {
  std::uint64_t event_visits = 0;  // occurrence-list entries inspected
  std::uint64_t scans = 0;
};

/// Called with every valid mapping whose span is narrower than the window
/// size. The span references scanner-owned storage valid only for the call.
using MappingVisitor = std::function<void(std::span<const Position>)>;

/// Greedy minimal-window scanner over one sequence. Holds reusable scratch
/// buffers, so one instance must not be shared between threads; the sequence
/// itself may be.
class Scanner {
 public:
  explicit Scanner(const EventSequence& sequence) : seq_(&sequence) {}

  /// All minimal windows of width at most `rho`, sorted by both endpoints.
  /// The episode must be strict and transitively closed.
  std::vector<Interval> minimal_windows(const Episode& episode, Position rho, const MappingVisitor& visitor = {});

  /// Earliest-occurrence mapping of `episode` into s[start, L], or nothing
  /// when that suffix does not cover it.
  std::optional<MappingVector> greedy_map(const Episode& episode, Position start);

  [[nodiscard]] const ScanStats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }
  [[nodiscard]] const EventSequence& sequence() const { return *seq_; }

 private:
  bool prepare(const Episode& episode, Position floor);
  bool settle(std::span<const Row> skeleton);

  const EventSequence* seq_;
  ScanStats stats_;

  // per-node scan state
  std::vector<std::span<const Position>> occ_;
  std::vector<std::size_t> cursor_;
  std::vector<Position> f_;
  std::vector<Position> floor_;
  std::vector<char> queued_;
  std::vector<NodeId> queue_;
  std::vector<std::pair<Position, NodeId>> heap_;  // min-heap keyed by f(v), ties by node id
  std::vector<Position> pushed_;
  Position hi_ = 0;
};

std::vector<Interval> find_minimal_windows(const Episode& episode, const EventSequence& seq, Position rho);

std::optional<MappingVector> greedy_map(const Episode& episode, const EventSequence& seq, Position start);

bool covers(const Episode& episode, const EventSequence& seq);

/// Frequency from the exact list of minimal windows of width at most rho.
/// Fixed: number of sliding windows [a, a + rho - 1], a in [2 - rho, L], that
/// contain a minimal window. Disjoint: greedy earliest-end selection of
/// pairwise disjoint minimal windows.
std::uint64_t frequency(std::span<const Interval> windows, Position rho, Position length, Measure measure);

Frequencies frequencies(std::span<const Interval> windows, Position rho, Position length);

}  // namespace episodes
