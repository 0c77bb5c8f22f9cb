#pragma once

#include <optional>
#include <span>
#include <vector>

#include "episodes/episode.hpp"
#include "episodes/store.hpp"

namespace episodes {

/// True when g + e is transitively closed, for tc `g`, a new edge `e`, and an
/// acyclic result: x must already precede every child of y and every parent
/// of x must already precede y.
bool stays_closed(const Episode& g, Edge e);

/// g + e without re-canonicalization. Valid for proper edges, which never
/// change the node order.
Episode plus_edge(const Episode& g, Edge e);

/// g - e without re-canonicalization; tc when e is a skeleton edge.
Episode minus_edge(const Episode& g, Edge e);

/// Case A join. `g1` and `g2` must have identical nodes and differ in one
/// edge each, with last(g1) the edge missing from g2 and g2's extra edge e2
/// ordered after it. Returns g1 + e2 when that is acyclic and transitively
/// closed, nothing otherwise (including when the preconditions fail).
std::optional<Episode> join_case_a(const Episode& g1, const Episode& g2);

/// Case B: candidates g1 + e2 that hide last(g1) behind a new two-edge path.
/// Edges already in `closure_of_g1` are skipped.
std::vector<Episode> extend_case_b(const Episode& g1, const Episode& closure_of_g1);

/// Single-edge candidates for an episode without proper edges.
std::vector<Episode> extend_parallel(const Episode& g);

/// All candidates with one more edge than the members of `level`, which
/// share one (node count, edge count) level.
std::vector<Episode> generate_edge_candidates(std::span<const EpisodeRecord* const> level);

/// Candidates with one more node, from parallel episodes of equal size.
std::vector<Episode> generate_node_candidates(std::span<const Episode> parallel);

}  // namespace episodes
