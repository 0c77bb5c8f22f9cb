#include "episodes/closure.hpp"

#include <algorithm>
#include <stdexcept>

#include "episodes/errors.hpp"

namespace episodes {

ClosureEngine::ClosureEngine(const EventSequence& sequence, Position rho)
    : seq_(&sequence), rho_(rho), scanner_(sequence) {
  if (rho < 1) throw ConfigError("window size must be at least 1");
}

Episode ClosureEngine::node_closure(const Episode& g) {
  const auto windows = scanner_.minimal_windows(g, rho_);
  return node_closure(g, windows);
}

Episode ClosureEngine::node_closure(const Episode& g, std::span<const Interval> windows) {
  if (windows.empty()) return g;
  const auto own = g.labels();
  std::vector<Label> candidates;
  const Interval first = windows.front();
  for (Position i = first.a; i <= first.b; ++i) {
    const Label l = seq_->at(i);
    if (!std::binary_search(own.begin(), own.end(), l)) candidates.push_back(l);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::erase_if(candidates, [&](Label l) {
    return !std::all_of(windows.begin() + 1, windows.end(), [&](const Interval& w) { return seq_->contains(l, w); });
  });
  return g.with_solitary_nodes(candidates);
}

Episode ClosureEngine::edge_closure(const Episode& g, bool sieve) {
  const std::size_t n = g.size();
  // refuted[x] bit y: some instance maps y before x, so (x, y) cannot be added
  std::vector<Row> refuted(n, 0);
  MappingVisitor visitor;
  if (sieve) {
    visitor = [&](std::span<const Position> f) {
      for (NodeId x = 0; x < n; ++x) {
        for (NodeId y = 0; y < n; ++y) {
          if (f[y] < f[x]) refuted[x] |= bit(y);
        }
      }
    };
  }
  const auto windows = scanner_.minimal_windows(g, rho_, visitor);
  if (windows.empty()) return g;

  const auto succ = g.successor_rows();
  std::vector<Row> rows(succ.begin(), succ.end());
  std::vector<Row> trial(n);
  bool changed = false;
  for (NodeId x = 0; x < n; ++x) {
    for (NodeId y = 0; y < n; ++y) {
      if (x == y || g.label(x) == g.label(y) || g.has_edge(x, y) || g.has_edge(y, x)) continue;
      if (refuted[x] & bit(y)) continue;
      // transitive closure of g + (y, x): every node reaching y now reaches x
      // and everything after x
      std::copy(succ.begin(), succ.end(), trial.begin());
      const Row reach_from_x = bit(x) | succ[x];
      trial[y] |= reach_from_x;
      for (NodeId u = 0; u < n; ++u) {
        if (succ[u] & bit(y)) trial[u] |= reach_from_x;
      }
      const auto reversed = Episode::trusted(std::vector<Label>(g.labels().begin(), g.labels().end()), trial);
      if (scanner_.minimal_windows(reversed, rho_).empty()) {
        rows[x] |= bit(y);
        changed = true;
      }
    }
  }
  if (!changed) return g;
  return Episode::trusted(std::vector<Label>(g.labels().begin(), g.labels().end()), reachability(rows));
}

Episode ClosureEngine::i_closure(const Episode& g) { return edge_closure(node_closure(g)); }

Episode ClosureEngine::i_closure(const Episode& g, std::span<const Interval> windows) {
  return edge_closure(node_closure(g, windows));
}

Episode ClosureEngine::closure(const Episode& g, ClosureMode mode) {
  return mode == ClosureMode::instance ? i_closure(g) : edge_closure(g);
}

Episode ClosureEngine::closure(const Episode& g, ClosureMode mode, std::span<const Interval> windows) {
  if (windows.empty()) return g;
  return mode == ClosureMode::instance ? i_closure(g, windows) : edge_closure(g);
}

bool ClosureEngine::is_closed(const Episode& g, ClosureMode mode) { return closure(g, mode) == g; }

Episode node_closure(const Episode& g, const ClosureContext& ctx) { return ClosureEngine(ctx).node_closure(g); }

Episode edge_closure(const Episode& g, const ClosureContext& ctx) { return ClosureEngine(ctx).edge_closure(g); }

Episode i_closure(const Episode& g, const ClosureContext& ctx) { return ClosureEngine(ctx).i_closure(g); }

bool is_closed(const Episode& g, const ClosureContext& ctx, ClosureMode mode) {
  return ClosureEngine(ctx).is_closed(g, mode);
}

std::vector<NodeId> closure_embedding(const Episode& g, const Episode& closure) {
  auto emb = rank_embedding(g, closure);
  if (!emb) throw std::logic_error("closure does not contain the episode's nodes");
  return std::move(*emb);
}

bool closure_has_edge(std::span<const NodeId> embedding, const Episode& closure, Edge e) {
  return closure.has_edge(embedding[e.source], embedding[e.target]);
}

}  // namespace episodes
