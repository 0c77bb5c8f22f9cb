#include "episodes/candidates.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "episodes/closure.hpp"

namespace episodes {
namespace {

template <typename F>
void for_each_bit(Row row, F&& f) {
  while (row) {
    f(static_cast<NodeId>(std::countr_zero(row)));
    row &= row - 1;
  }
}

std::vector<Row> rows_of(const Episode& g) {
  const auto r = g.successor_rows();
  return {r.begin(), r.end()};
}

std::vector<Label> labels_of(const Episode& g) { return {g.labels().begin(), g.labels().end()}; }

// Join conditions for G1 and G2 once e1 and e2 are known.
bool joinable(const Episode& g1, Edge e1, Edge e2) {
  const auto [x1, y1] = e1;
  const auto [x2, y2] = e2;
  if (g1.has_edge(y2, x2)) return false;
  if (x1 != y2 && x2 != y1) return true;
  if (x1 != y2 && x2 == y1) return g1.has_edge(x1, y2);
  if (x1 == y2 && x2 != y1) return g1.has_edge(x2, y1);
  return false;
}

}  // namespace

bool stays_closed(const Episode& g, Edge e) {
  const Row kids = g.successors(e.target);
  const Row parents = g.predecessors(e.source);
  return (kids & ~g.successors(e.source)) == 0 && (parents & ~g.predecessors(e.target)) == 0;
}

Episode minus_edge(const Episode& g, Edge e) {
  auto rows = rows_of(g);
  rows[e.source] &= ~bit(e.target);
  return Episode::trusted(labels_of(g), std::move(rows));
}

Episode plus_edge(const Episode& g, Edge e) {
  auto rows = rows_of(g);
  rows[e.source] |= bit(e.target);
  return Episode::trusted(labels_of(g), std::move(rows));
}

std::optional<Episode> join_case_a(const Episode& g1, const Episode& g2) {
  if (g1.size() != g2.size() || !std::ranges::equal(g1.labels(), g2.labels())) return std::nullopt;
  std::optional<Edge> only1;
  std::optional<Edge> only2;
  for (NodeId v = 0; v < g1.size(); ++v) {
    const Row a = g1.successors(v) & ~g2.successors(v);
    const Row b = g2.successors(v) & ~g1.successors(v);
    if (std::popcount(a) > 1 || std::popcount(b) > 1) return std::nullopt;
    if (a) {
      if (only1) return std::nullopt;
      only1 = Edge{v, static_cast<NodeId>(std::countr_zero(a))};
    }
    if (b) {
      if (only2) return std::nullopt;
      only2 = Edge{v, static_cast<NodeId>(std::countr_zero(b))};
    }
  }
  if (!only1 || !only2 || g1.last_proper_skeleton_edge() != only1 || !(*only2 > *only1)) return std::nullopt;
  if (!g1.is_proper(*only2) || !joinable(g1, *only1, *only2)) return std::nullopt;
  return plus_edge(g1, *only2);
}

std::vector<Episode> extend_case_b(const Episode& g1, const Episode& closure_of_g1) {
  std::vector<Episode> out;
  const auto last = g1.last_proper_skeleton_edge();
  if (!last) return out;
  const auto [x1, y1] = *last;
  const auto skel = g1.skeleton_rows();
  const auto emb = closure_embedding(g1, closure_of_g1);

  auto consider = [&](Edge e2) {
    if (!g1.is_proper(e2) || g1.has_edge(e2) || g1.has_edge(e2.target, e2.source)) return;
    if (closure_has_edge(emb, closure_of_g1, e2) || !stays_closed(g1, e2)) return;
    Episode h = plus_edge(g1, e2);
    if (h.last_proper_skeleton_edge() == e2) out.push_back(std::move(h));
  };
  for_each_bit(skel[x1], [&](NodeId x2) {
    if (x2 != y1) consider({x2, y1});
  });
  for (NodeId y2 = 0; y2 < g1.size(); ++y2) {
    if (y2 != x1 && (skel[y2] & bit(y1))) consider({x1, y2});
  }
  return out;
}

std::vector<Episode> extend_parallel(const Episode& g) {
  std::vector<Episode> out;
  for (NodeId x = 0; x < g.size(); ++x) {
    for (NodeId y = 0; y < g.size(); ++y) {
      const Edge e{x, y};
      if (g.label(x) != g.label(y) && stays_closed(g, e)) out.push_back(plus_edge(g, e));
    }
  }
  return out;
}

std::vector<Episode> generate_edge_candidates(std::span<const EpisodeRecord* const> level) {
  std::vector<Episode> out;

  // G2 indexed by G2 - e2 for each proper skeleton edge e2; a partner G1
  // looks itself up by G1 - last(G1).
  struct Partner {
    const EpisodeRecord* record;
    Edge e2;
  };
  std::unordered_map<Episode, std::vector<Partner>, EpisodeHash> partners;
  for (const EpisodeRecord* rec : level) {
    const Episode& g = rec->episode;
    if (!g.has_proper_edges()) continue;
    for (const Edge& e : g.proper_skeleton_edges()) partners[minus_edge(g, e)].push_back({rec, e});
  }

  for (const EpisodeRecord* rec : level) {
    const Episode& g1 = rec->episode;
    if (!g1.has_proper_edges()) {
      auto more = extend_parallel(g1);
      std::ranges::move(more, std::back_inserter(out));
      continue;
    }
    const Edge e1 = *g1.last_proper_skeleton_edge();
    const auto emb = closure_embedding(g1, rec->iclosure);
    if (auto it = partners.find(minus_edge(g1, e1)); it != partners.end()) {
      for (const Partner& p : it->second) {
        if (!(p.e2 > e1) || !joinable(g1, e1, p.e2)) continue;
        if (closure_has_edge(emb, rec->iclosure, p.e2)) continue;
        out.push_back(plus_edge(g1, p.e2));
      }
    }
    auto hidden = extend_case_b(g1, rec->iclosure);
    std::ranges::move(hidden, std::back_inserter(out));
  }
  return out;
}

std::vector<Episode> generate_node_candidates(std::span<const Episode> parallel) {
  std::vector<Episode> out;
  if (parallel.empty()) return out;
  std::map<std::vector<Label>, std::vector<const Episode*>> by_prefix;
  for (const Episode& g : parallel) {
    by_prefix[std::vector<Label>(g.labels().begin(), g.labels().end() - 1)].push_back(&g);
  }
  for (auto& [prefix, group] : by_prefix) {
    std::ranges::sort(group, {}, [](const Episode* g) { return g->labels().back(); });
    for (const Episode* g : group) {
      const Label last = g->labels().back();
      for (const Episode* h : group) {
        const Label next = h->labels().back();
        if (next > last) out.push_back(g->with_solitary_nodes(std::span<const Label>(&next, 1)));
      }
      // Chain one more copy of the last label after the deepest one.
      const auto x = static_cast<NodeId>(g->size() - 1);
      auto labels = labels_of(*g);
      labels.push_back(last);
      auto rows = rows_of(*g);
      rows.push_back(0);
      rows[x] |= bit(x + 1);
      for_each_bit(g->predecessors(x), [&](NodeId u) { rows[u] |= bit(x + 1); });
      out.push_back(Episode::trusted(std::move(labels), std::move(rows)));
    }
  }
  return out;
}

}  // namespace episodes
