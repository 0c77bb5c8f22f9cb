#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "episodes/label.hpp"

namespace episodes {

using NodeId = std::uint32_t;

/// One adjacency row: bit j of row i is set when (i, j) is an edge.
using Row = std::uint64_t;

inline constexpr std::size_t kMaxNodes = 64;

struct Edge {
  NodeId source = 0;
  NodeId target = 0;

  // Lexicographic on (source, target); this is the order that defines the
  // last proper skeleton edge.
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr Row bit(NodeId v) { return Row{1} << v; }

/// A strict episode in canonical node order.
///
/// Nodes are sorted by label; nodes sharing a label are sorted so that each
/// one is an ancestor of the next. The edge relation is acyclic and every pair
/// of equal-label nodes is connected by a path. The edge set is not required to
/// be transitively closed; the miner only ever stores closed episodes, and
/// `is_transitively_closed()` reports which kind a value is.
///
/// Values are immutable; every edit returns a new episode.
class Episode {
 public:
  /// The empty episode.
  Episode() = default;

  /// Sorts nodes into canonical order and relabels `raw_edges`, whose ids
  /// index into `labels`. Throws CycleError or NotStrictError.
  static Episode canonicalize(std::span<const Label> labels, std::span<const Edge> raw_edges);

  /// Builds an episode whose nodes are already in canonical order. Throws
  /// CycleError, NotStrictError, or std::invalid_argument if the order is not
  /// canonical.
  static Episode from_canonical(std::vector<Label> labels, std::span<const Edge> edges);

  /// Adopts adjacency rows without validation. The caller guarantees that
  /// the result satisfies every class invariant.
  static Episode trusted(std::vector<Label> labels, std::vector<Row> successors);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] bool empty() const { return labels_.empty(); }
  [[nodiscard]] Label label(NodeId v) const { return labels_[v]; }
  [[nodiscard]] std::span<const Label> labels() const { return labels_; }

  [[nodiscard]] bool has_edge(NodeId u, NodeId v) const { return (succ_[u] >> v) & 1U; }
  [[nodiscard]] bool has_edge(Edge e) const { return has_edge(e.source, e.target); }
  [[nodiscard]] Row successors(NodeId v) const { return succ_[v]; }
  [[nodiscard]] Row predecessors(NodeId v) const { return pred_[v]; }
  [[nodiscard]] std::span<const Row> successor_rows() const { return succ_; }
  [[nodiscard]] std::size_t edge_count() const;

  /// All edges in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;

  [[nodiscard]] bool is_proper(Edge e) const { return labels_[e.source] != labels_[e.target]; }

  [[nodiscard]] bool is_transitively_closed() const;
  [[nodiscard]] Episode transitive_closure() const;

  /// Skeleton rows: bit w of row v is set when (v, w) is an edge with no
  /// intermediate node u such that (v, u) and (u, w) are edges.
  [[nodiscard]] std::vector<Row> skeleton_rows() const;
  [[nodiscard]] std::vector<Edge> skeleton_edges() const;
  [[nodiscard]] std::vector<Edge> proper_skeleton_edges() const;

  /// Largest proper skeleton edge in edge order.
  [[nodiscard]] std::optional<Edge> last_proper_skeleton_edge() const;

  /// True when some edge joins two distinct labels.
  [[nodiscard]] bool has_proper_edges() const;

  /// True when v is incident to no proper skeleton edge.
  [[nodiscard]] bool lacks_proper_skeleton_edge(NodeId v, std::span<const Row> skeleton) const;

  /// Number of nodes sharing v's label that precede v.
  [[nodiscard]] std::size_t rank_within_label(NodeId v) const;

  // Structural edits. Each result is re-canonicalized and validated.
  [[nodiscard]] Episode with_edge(Edge e) const;
  [[nodiscard]] Episode with_edges(std::span<const Edge> extra) const;
  [[nodiscard]] Episode without_edge(Edge e) const;
  [[nodiscard]] Episode with_node(Label label) const;

  /// Adds one edgeless node per label. Every label must be absent from this
  /// episode; throws NotStrictError otherwise.
  [[nodiscard]] Episode with_solitary_nodes(std::span<const Label> labels) const;
  [[nodiscard]] Episode without_node(NodeId v) const;

  /// Induced subgraph on the nodes whose bit is set in `keep`.
  [[nodiscard]] Episode induced(Row keep) const;

  friend bool operator==(const Episode&, const Episode&) = default;
  friend auto operator<=>(const Episode& a, const Episode& b) {
    if (auto c = a.labels_ <=> b.labels_; c != 0) return c;
    return a.succ_ <=> b.succ_;
  }

  [[nodiscard]] std::size_t hash() const;

 private:
  Episode(std::vector<Label> labels, std::vector<Row> succ);

  std::vector<Label> labels_;
  std::vector<Row> succ_;
  std::vector<Row> pred_;
};

struct EpisodeHash {
  std::size_t operator()(const Episode& e) const noexcept { return e.hash(); }
};

/// Reachability rows of an arbitrary edge relation (Floyd-Warshall on bits).
std::vector<Row> reachability(std::span<const Row> successors);

/// Maps node i of `sub` to the node of `sup` with the same label and the same
/// rank among nodes of that label. Empty when `sup` lacks such a node.
std::optional<std::vector<NodeId>> rank_embedding(const Episode& sub, const Episode& sup);

/// Subepisode test for strict, transitively closed episodes. With identical
/// nodes this is edge-set inclusion. With fewer nodes in `g`, it searches for
/// a label-preserving injection, monotone within each label, under which every
/// edge of `g` maps onto an edge of `h`.
bool is_subepisode(const Episode& g, const Episode& h);

/// Strict subepisode: is_subepisode(g, h) and g != h.
bool is_proper_subepisode(const Episode& g, const Episode& h);

/// Both operands must be canonical and transitively closed.
inline bool equivalent(const Episode& g, const Episode& h) { return g == h; }

}  // namespace episodes

template <>
struct std::hash<episodes::Episode> {
  std::size_t operator()(const episodes::Episode& e) const noexcept { return e.hash(); }
};
