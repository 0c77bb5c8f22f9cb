#include "episodes/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "episodes/errors.hpp"

namespace episodes::oracle {
namespace {

std::vector<NodeId> topological_order(const Episode& g) {
  std::vector<NodeId> order;
  std::vector<int> indegree(g.size(), 0);
  for (NodeId u = 0; u < g.size(); ++u) {
    for (NodeId v = 0; v < g.size(); ++v) {
      if (g.has_edge(u, v)) ++indegree[v];
    }
  }
  std::vector<char> done(g.size(), 0);
  while (order.size() < g.size()) {
    NodeId pick = 0;
    while (done[pick] || indegree[pick] != 0) ++pick;
    done[pick] = 1;
    order.push_back(pick);
    for (NodeId v = 0; v < g.size(); ++v) {
      if (g.has_edge(pick, v)) --indegree[v];
    }
  }
  return order;
}

bool place(const Episode& g, std::span<const NodeId> order, std::size_t k, std::span<const Label> window,
           std::vector<int>& pos, std::vector<char>& used) {
  if (k == order.size()) return true;
  const NodeId v = order[k];
  for (int p = 0; p < static_cast<int>(window.size()); ++p) {
    if (used[p] || window[p] != g.label(v)) continue;
    bool ok = true;
    for (NodeId u = 0; u < g.size() && ok; ++u) {
      if (g.has_edge(u, v) && pos[u] >= p) ok = false;
    }
    if (!ok) continue;
    used[p] = 1;
    pos[v] = p;
    if (place(g, order, k + 1, window, pos, used)) return true;
    used[p] = 0;
  }
  pos[v] = -1;
  return false;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Forward-only edge sets on a k-chain that are transitively closed.
std::uint64_t closed_forward_sets(std::size_t k) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (mask >> p & 1) adj[pairs[p].first][pairs[p].second] = 1;
    }
    bool closed = true;
    for (std::size_t a = 0; a < k && closed; ++a) {
      for (std::size_t b = 0; b < k && closed; ++b) {
        for (std::size_t c = 0; c < k && closed; ++c) {
          if (adj[a][b] && adj[b][c] && !adj[a][c]) closed = false;
        }
      }
    }
    count += closed;
  }
  return count;
}

void check_length(const EventSequence& s) {
  if (s.length() > kMaxSequenceLength) {
    throw BudgetError("oracle scans are limited to sequences of " + std::to_string(kMaxSequenceLength) + " events");
  }
}

}  // namespace

EpisodeUniverse enumerate_episodes(std::span<const Label> alphabet, std::size_t max_nodes) {
  if (max_nodes > kMaxUniverseNodes) {
    throw BudgetError("episode enumeration is limited to " + std::to_string(kMaxUniverseNodes) + " nodes");
  }
  EpisodeUniverse u;
  u.alphabet.assign(alphabet.begin(), alphabet.end());
  std::ranges::sort(u.alphabet);
  u.alphabet.erase(std::unique(u.alphabet.begin(), u.alphabet.end()), u.alphabet.end());
  u.max_nodes = max_nodes;
  if (u.alphabet.empty()) return u;

  for (std::size_t k = 1; k <= max_nodes; ++k) {
    // non-decreasing index sequences = label multisets in canonical order
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::vector<Label> labels(k);
      for (std::size_t i = 0; i < k; ++i) labels[i] = u.alphabet[idx[i]];
      std::vector<std::pair<NodeId, NodeId>> free_pairs;
      std::vector<Edge> forced;
      for (NodeId i = 0; i < k; ++i) {
        for (NodeId j = i + 1; j < k; ++j) {
          if (labels[i] == labels[j]) {
            forced.push_back({i, j});
          } else {
            free_pairs.emplace_back(i, j);
          }
        }
      }
      std::vector<int> state(free_pairs.size(), 0);  // 0 none, 1 forward, 2 backward
      while (true) {
        std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
        std::vector<Edge> edges = forced;
        for (const Edge& e : forced) adj[e.source][e.target] = 1;
        for (std::size_t p = 0; p < free_pairs.size(); ++p) {
          auto [i, j] = free_pairs[p];
          if (state[p] == 2) std::swap(i, j);
          if (state[p] != 0) {
            adj[i][j] = 1;
            edges.push_back({i, j});
          }
        }
        bool closed = true;
        for (std::size_t a = 0; a < k && closed; ++a) {
          for (std::size_t b = 0; b < k && closed; ++b) {
            for (std::size_t c = 0; c < k && closed; ++c) {
              if (adj[a][b] && adj[b][c] && !adj[a][c]) closed = false;
            }
          }
        }
        // closed plus antisymmetric pairs means acyclic
        bool acyclic = true;
        for (std::size_t a = 0; a < k; ++a) acyclic = acyclic && !adj[a][a];
        if (closed && acyclic) u.episodes.push_back(Episode::from_canonical(labels, edges));

        std::size_t p = 0;
        while (p < state.size() && state[p] == 2) state[p++] = 0;
        if (p == state.size()) break;
        ++state[p];
      }

      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == u.alphabet.size() - 1) --pos;
      if (pos == 0) break;
      const std::size_t v = idx[pos - 1] + 1;
      for (std::size_t i = pos - 1; i < k; ++i) idx[i] = v;
    }
  }
  return u;
}

std::uint64_t count_serial_subepisodes(std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= n; ++k) total += binomial(n, k) * closed_forward_sets(k);
  return total;
}

std::uint64_t count_serial_subepisodes_direct(std::size_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
    std::vector<int> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (subset >> i & 1) members.push_back(static_cast<int>(i));
    }
    // edges may only follow the serial order of the original labels
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) pairs.emplace_back(members[a], members[b]);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (mask >> p & 1) adj[pairs[p].first][pairs[p].second] = 1;
      }
      bool closed = true;
      for (int a : members) {
        for (int b : members) {
          for (int c : members) {
            if (adj[a][b] && adj[b][c] && !adj[a][c]) closed = false;
          }
        }
      }
      total += closed;
    }
  }
  return total;
}

bool covers(const Episode& g, std::span<const Label> window) {
  if (g.empty()) return true;
  if (g.size() > window.size()) return false;
  const auto order = topological_order(g);
  std::vector<int> pos(g.size(), -1);
  std::vector<char> used(window.size(), 0);
  return place(g, order, 0, window, pos, used);
}

NaiveScan naive_scan(const Episode& g, const EventSequence& s, Position rho) {
  check_length(s);
  if (g.size() > kMaxUniverseNodes) throw BudgetError("oracle scans are limited to small episodes");
  const Position len = s.length();
  const auto events = s.events();
  auto covered = [&](Position a, Position b) {
    a = std::max<Position>(a, 1);
    b = std::min(b, len);
    if (a > b) return g.empty();
    return covers(g, events.subspan(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - a + 1)));
  };

  NaiveScan out;
  // shortest[a]: smallest b with s[a, b] covering g and b - a < rho
  std::vector<Position> shortest(static_cast<std::size_t>(len) + 2, 0);
  for (Position a = 1; a <= len; ++a) {
    for (Position b = a; b <= len && b - a < rho; ++b) {
      if (covered(a, b)) {
        shortest[a] = b;
        break;
      }
    }
  }
  for (Position a = 1; a <= len; ++a) {
    if (shortest[a] == 0) continue;
    // [a, b] is minimal unless [a + 1, b] also covers
    if (!covered(a + 1, shortest[a])) out.windows.push_back({a, shortest[a]});
  }

  for (Position a = 2 - rho; a <= len; ++a) out.fixed += covered(a, a + rho - 1);

  std::vector<std::uint64_t> best(static_cast<std::size_t>(len) + 1, 0);
  for (Position b = 1; b <= len; ++b) {
    best[b] = best[b - 1];
    for (Position a = std::max<Position>(1, b - rho + 1); a <= b; ++a) {
      if (covered(a, b)) best[b] = std::max(best[b], best[a - 1] + 1);
    }
  }
  out.disjoint = best[len];
  return out;
}

bool naive_subepisode(const Episode& g, const Episode& h) {
  if (g.size() > h.size()) return false;
  std::vector<NodeId> image(g.size());
  std::vector<char> used(h.size(), 0);
  auto extend = [&](auto&& self, NodeId v) -> bool {
    if (v == g.size()) {
      for (NodeId a = 0; a < g.size(); ++a) {
        for (NodeId b = 0; b < g.size(); ++b) {
          if (g.has_edge(a, b) && !h.has_edge(image[a], image[b])) return false;
        }
      }
      return true;
    }
    for (NodeId w = 0; w < h.size(); ++w) {
      if (used[w] || h.label(w) != g.label(v)) continue;
      used[w] = 1;
      image[v] = w;
      const bool found = self(self, v + 1);
      used[w] = 0;
      if (found) return true;
    }
    return false;
  };
  return extend(extend, 0);
}

std::vector<Scored> naive_frequencies(const EventSequence& s, Position rho, const EpisodeUniverse& universe) {
  check_length(s);
  std::map<Label, std::size_t> available;
  for (Label l : s.events()) ++available[l];
  std::vector<Scored> out;
  for (const Episode& g : universe.episodes) {
    std::map<Label, std::size_t> need;
    for (Label l : g.labels()) ++need[l];
    if (std::ranges::any_of(need, [&](const auto& kv) { return available[kv.first] < kv.second; })) continue;
    const NaiveScan scan = naive_scan(g, s, rho);
    if (scan.fixed == 0) continue;
    out.push_back({g, {scan.fixed, scan.disjoint}});
  }
  return out;
}

std::vector<Scored> naive_fclosed(std::span<const Scored> scored, std::uint64_t sigma, Measure measure) {
  std::map<std::uint64_t, std::vector<const Scored*>> by_freq;
  for (const Scored& x : scored) {
    if (x.freq.get(measure) >= sigma) by_freq[x.freq.get(measure)].push_back(&x);
  }
  std::vector<Scored> out;
  for (const auto& [f, group] : by_freq) {
    for (const Scored* g : group) {
      const bool absorbed = std::ranges::any_of(group, [&](const Scored* h) {
        return h != g && !(h->episode == g->episode) && naive_subepisode(g->episode, h->episode);
      });
      if (!absorbed) out.push_back(*g);
    }
  }
  return out;
}

std::vector<Scored> naive_fclosed(const EventSequence& s, Position rho, std::uint64_t sigma, Measure measure,
                                  const EpisodeUniverse& universe) {
  const auto scored = naive_frequencies(s, rho, universe);
  return naive_fclosed(scored, sigma, measure);
}

}  // namespace episodes::oracle
