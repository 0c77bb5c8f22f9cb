#pragma once

#include <span>

#include "episodes/episode.hpp"
#include "episodes/scanner.hpp"
#include "episodes/sequence.hpp"

namespace episodes {

/// Which closure the miner treats as "the" closure. `instance` adds nodes and
/// then edges; `edge` only adds edges.
enum class ClosureMode { instance, edge };

struct ClosureContext {
  const EventSequence& sequence;
  Position rho;
};

/// Closure operators computed from minimal windows of width at most rho.
/// Owns a Scanner, so use one engine per thread.
class ClosureEngine {
 public:
  /// Throws ConfigError when rho < 1.
  ClosureEngine(const EventSequence& sequence, Position rho);
  explicit ClosureEngine(const ClosureContext& ctx) : ClosureEngine(ctx.sequence, ctx.rho) {}

  /// Adds one solitary node for every label that occurs in every minimal
  /// window and does not yet label a node. Episodes without a window are
  /// returned unchanged.
  Episode node_closure(const Episode& g);
  Episode node_closure(const Episode& g, std::span<const Interval> windows);

  /// Adds (x, y) for each unordered pair of distinct-label nodes when
  /// g + (y, x) has no minimal window, then closes transitively. With `sieve`
  /// set, pairs already contradicted by a mapping seen while scanning g skip
  /// the per-pair scan; the result is the same either way.
  Episode edge_closure(const Episode& g, bool sieve = true);

  /// edge_closure(node_closure(g)).
  Episode i_closure(const Episode& g);
  Episode i_closure(const Episode& g, std::span<const Interval> windows);

  Episode closure(const Episode& g, ClosureMode mode);
  Episode closure(const Episode& g, ClosureMode mode, std::span<const Interval> windows);

  bool is_closed(const Episode& g, ClosureMode mode);

  Scanner& scanner() { return scanner_; }
  [[nodiscard]] Position rho() const { return rho_; }
  [[nodiscard]] const EventSequence& sequence() const { return *seq_; }

 private:
  const EventSequence* seq_;
  Position rho_;
  Scanner scanner_;
};

Episode node_closure(const Episode& g, const ClosureContext& ctx);
Episode edge_closure(const Episode& g, const ClosureContext& ctx);
Episode i_closure(const Episode& g, const ClosureContext& ctx);
bool is_closed(const Episode& g, const ClosureContext& ctx, ClosureMode mode);

/// Node i of `g` mapped into `closure`. Closures only add nodes with labels
/// absent from `g`, so the label-rank embedding is the inclusion map.
std::vector<NodeId> closure_embedding(const Episode& g, const Episode& closure);

/// True when edge `e` of g's node space is an edge of `closure`.
bool closure_has_edge(std::span<const NodeId> embedding, const Episode& closure, Edge e);

}  // namespace episodes
