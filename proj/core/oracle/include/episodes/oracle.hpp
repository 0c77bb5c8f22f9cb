#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "episodes/episode.hpp"
#include "episodes/scanner.hpp"
#include "episodes/sequence.hpp"

/// Brute-force reference implementations. Nothing here calls the scanner,
/// closure, or miner code; only the value types are shared.
namespace episodes::oracle {

inline constexpr std::size_t kMaxUniverseNodes = 5;
inline constexpr Position kMaxSequenceLength = 30;

struct EpisodeUniverse {
  std::vector<Label> alphabet;
  std::size_t max_nodes = 0;
  std::vector<Episode> episodes;
};

/// Every strict, transitively closed episode with 1..max_nodes nodes over
/// `alphabet`, each once. Throws BudgetError above kMaxUniverseNodes.
EpisodeUniverse enumerate_episodes(std::span<const Label> alphabet, std::size_t max_nodes);

/// Table 1 count: nonempty episodes below the serial episode on n distinct
/// labels, as a sum over subset sizes of C(n, k) times the closed edge sets
/// of a k-chain.
std::uint64_t count_serial_subepisodes(std::size_t n);

/// The same count by visiting every label subset and every edge subset.
std::uint64_t count_serial_subepisodes_direct(std::size_t n);

/// Backtracking search for a valid injective mapping into `window`.
bool covers(const Episode& g, std::span<const Label> window);

struct NaiveScan {
  std::vector<Interval> windows;
  std::uint64_t fixed = 0;
  std::uint64_t disjoint = 0;
};

/// Minimal windows of width at most rho by testing subwindows, fixed
/// frequency by testing every sliding window, disjoint frequency by dynamic
/// programming over covering windows. Throws BudgetError for long inputs.
NaiveScan naive_scan(const Episode& g, const EventSequence& s, Position rho);

/// g is a subepisode of h: some label-preserving injection maps every edge
/// of g onto an edge of h. Tries every injection.
bool naive_subepisode(const Episode& g, const Episode& h);

struct Scored {
  Episode episode;
  Frequencies freq;
};

/// Frequent members of `universe` (under `measure`) that have no strict
/// superepisode in the universe with equal frequency.
std::vector<Scored> naive_fclosed(const EventSequence& s, Position rho, std::uint64_t sigma, Measure measure,
                                  const EpisodeUniverse& universe);

/// Frequencies of every universe member that occurs at all.
std::vector<Scored> naive_frequencies(const EventSequence& s, Position rho, const EpisodeUniverse& universe);

/// f-closed filter over already scored episodes.
std::vector<Scored> naive_fclosed(std::span<const Scored> scored, std::uint64_t sigma, Measure measure);

}  // namespace episodes::oracle
