#include "episodes/miner.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "episodes/candidates.hpp"
#include "episodes/errors.hpp"

namespace episodes {
namespace {

template <typename F>
void for_each_bit(Row row, F&& f) {
  while (row) {
    f(static_cast<NodeId>(std::countr_zero(row)));
    row &= row - 1;
  }
}

Row all_nodes(std::size_t n) { return n == kMaxNodes ? ~Row{0} : bit(static_cast<NodeId>(n)) - 1; }

// The subgraph of `host` on `mask` with the edges in `rows` (host numbering).
Episode extract(const Episode& host, Row mask, std::span<const Row> rows) {
  std::vector<Label> labels;
  std::vector<NodeId> position(host.size(), 0);
  for_each_bit(mask, [&](NodeId v) {
    position[v] = static_cast<NodeId>(labels.size());
    labels.push_back(host.label(v));
  });
  std::vector<Row> out(labels.size(), 0);
  for_each_bit(mask, [&](NodeId u) {
    for_each_bit(rows[u] & mask, [&](NodeId w) { out[position[u]] |= bit(position[w]); });
  });
  return Episode::trusted(std::move(labels), std::move(out));
}

bool has_label(const Episode& g, Label l) { return std::ranges::binary_search(g.labels(), l); }

struct Outcome {
  bool kept = false;
  EpisodeRecord record;
  std::vector<Episode> extra;
};

class Evaluator {
 public:
  Evaluator(const EventSequence& seq, const MiningConfig& config, const EpisodeStore& store)
      : seq_(&seq), config_(&config), store_(&store), engine_(seq, config.window) {}

  Outcome operator()(const Episode& g) {
    Outcome out;
    if (store_->contains(g) || !test_candidate(g, *store_)) return out;
    const auto windows = engine_.scanner().minimal_windows(g, config_->window);
    const Frequencies freq = frequencies(windows, config_->window, seq_->length());
    if (freq.get(config_->measure) < config_->min_freq) return out;
    Episode closure = engine_.closure(g, config_->closure, windows);
    if (config_->add_intermediate) {
      out.extra = add_intermediate(g, closure);
      if (config_->max_nodes) std::erase_if(out.extra, [&](const Episode& k) { return k.size() > *config_->max_nodes; });
    }
    out.kept = true;
    out.record = {g, std::move(closure), freq, false};
    return out;
  }

 private:
  const EventSequence* seq_;
  const MiningConfig* config_;
  const EpisodeStore* store_;
  ClosureEngine engine_;
};

std::vector<Outcome> evaluate(std::span<const Episode> batch, const EventSequence& seq, const MiningConfig& config,
                              const EpisodeStore& store, unsigned threads) {
  std::vector<Outcome> out(batch.size());
  const auto workers = static_cast<unsigned>(std::min<std::size_t>(threads, batch.size() / 16 + 1));
  if (workers <= 1) {
    Evaluator eval(seq, config, store);
    for (std::size_t i = 0; i < batch.size(); ++i) out[i] = eval(batch[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      Evaluator eval(seq, config, store);
      for (std::size_t i; (i = next.fetch_add(1)) < batch.size();) out[i] = eval(batch[i]);
    });
  }
  pool.clear();
  return out;
}

}  // namespace

void MiningConfig::validate() const {
  if (window < 1) throw ConfigError("window size must be at least 1");
  if (min_freq < 1) throw ConfigError("frequency threshold must be at least 1");
  if (max_nodes && (*max_nodes < 1 || *max_nodes > kMaxNodes)) {
    throw ConfigError("max nodes must be between 1 and " + std::to_string(kMaxNodes));
  }
}

bool test_candidate(const Episode& g, const EpisodeStore& store) {
  const auto skel = g.skeleton_rows();
  for (NodeId v = 0; v < g.size(); ++v) {
    Row proper = 0;
    for_each_bit(skel[v], [&](NodeId w) {
      if (g.label(v) != g.label(w)) proper |= bit(w);
    });
    bool ok = true;
    for_each_bit(proper, [&](NodeId w) {
      if (!ok) return;
      const Edge e{v, w};
      const Episode sub = minus_edge(g, e);
      const EpisodeRecord* rec = store.find(sub);
      ok = rec && !closure_has_edge(closure_embedding(sub, rec->iclosure), rec->iclosure, e);
    });
    if (!ok) return false;
  }
  if (g.size() <= 1) return true;
  for (NodeId v = 0; v < g.size(); ++v) {
    if (!g.lacks_proper_skeleton_edge(v, skel)) continue;
    const EpisodeRecord* rec = store.find(g.without_node(v));
    if (!rec) return false;
    const bool solitary = g.successors(v) == 0 && g.predecessors(v) == 0;
    if (solitary && has_label(rec->iclosure, g.label(v))) return false;
  }
  return true;
}

std::vector<Episode> add_intermediate(const Episode& g, const Episode& closure) {
  const auto emb = closure_embedding(g, closure);
  const std::size_t n = closure.size();
  const auto target = closure.successor_rows();
  Row inside = 0;
  std::vector<Row> rows(n, 0);
  for (NodeId u = 0; u < g.size(); ++u) {
    inside |= bit(emb[u]);
    for_each_bit(g.successors(u), [&](NodeId w) { rows[emb[u]] |= bit(emb[w]); });
  }
  const Row added = all_nodes(n) & ~inside;

  std::vector<Episode> out;
  // Adds H + Z where Z = E(tc(H + e)) - E(H + e), if Z is nonempty, inside
  // the closure, and H + Z is itself transitively closed.
  auto hidden_by = [&](Row mask, Edge e) {
    if ((target[e.source] & bit(e.target)) || (rows[e.target] & bit(e.source)) || (rows[e.source] & bit(e.target))) {
      return;
    }
    auto with_e = rows;
    with_e[e.source] |= bit(e.target);
    const auto closed = reachability(with_e);
    auto with_z = rows;
    bool nonempty = false;
    for (NodeId u = 0; u < n; ++u) {
      const Row z = closed[u] & ~with_e[u];
      if (z & ~target[u]) return;
      nonempty = nonempty || z != 0;
      with_z[u] |= z;
    }
    if (nonempty && reachability(with_z) == with_z) out.push_back(extract(closure, mask, with_z));
  };

  for_each_bit(added, [&](NodeId x) {
    const Row mask = inside | bit(x);
    out.push_back(extract(closure, mask, rows));
    for_each_bit(inside, [&](NodeId y) {
      hidden_by(mask, {x, y});
      hidden_by(mask, {y, x});
    });
  });
  for_each_bit(added, [&](NodeId x) {
    for_each_bit(added & ~all_nodes(x + 1), [&](NodeId y) {
      if (!(target[x] & bit(y)) && !(target[y] & bit(x))) out.push_back(extract(closure, inside | bit(x) | bit(y), rows));
    });
  });
  for_each_bit(inside, [&](NodeId x) {
    for_each_bit(inside & ~bit(x), [&](NodeId y) { hidden_by(inside, {x, y}); });
  });

  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase(out, g);
  return out;
}

std::vector<EpisodeRecord> f_closure_filter(std::span<const EpisodeRecord> closed, Measure measure) {
  using Key = std::pair<std::uint64_t, std::vector<Label>>;
  std::map<Key, std::vector<std::size_t>> index;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const Episode& g = closed[i].episode;
    index[{closed[i].freq.get(measure), {g.labels().begin(), g.labels().end()}}].push_back(i);
  }

  std::vector<char> marked(closed.size(), 0);
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const Episode& g = closed[i].episode;
    const std::uint64_t f = closed[i].freq.get(measure);
    for (std::size_t j : index[{f, {g.labels().begin(), g.labels().end()}}]) {
      if (j != i && is_proper_subepisode(g, closed[j].episode)) marked[i] = 1;
    }

    // Records with fewer nodes and equal frequency: walk the proper
    // sub-multisets of g's labels and test only the ones that are indexed.
    std::vector<Label> distinct;
    std::vector<std::size_t> count;
    for (Label l : g.labels()) {
      if (distinct.empty() || distinct.back() != l) {
        distinct.push_back(l);
        count.push_back(0);
      }
      ++count.back();
    }
    std::vector<std::size_t> take(distinct.size(), 0);
    std::vector<Label> sub;
    while (true) {
      std::size_t k = 0;
      while (k < take.size() && take[k] == count[k]) take[k++] = 0;
      if (k == take.size()) break;
      ++take[k];
      sub.clear();
      for (std::size_t d = 0; d < distinct.size(); ++d) sub.insert(sub.end(), take[d], distinct[d]);
      if (sub.size() == g.size()) continue;
      auto it = index.find({f, sub});
      if (it == index.end()) continue;
      for (std::size_t j : it->second) {
        if (!marked[j] && is_subepisode(closed[j].episode, g)) marked[j] = 1;
      }
    }
  }

  std::vector<EpisodeRecord> out;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (!marked[i]) out.push_back(closed[i]);
  }
  return out;
}

void sort_records(std::vector<EpisodeRecord>& records) {
  std::ranges::sort(records, [](const EpisodeRecord& a, const EpisodeRecord& b) {
    const auto ka = std::make_pair(a.episode.size(), a.episode.edge_count());
    const auto kb = std::make_pair(b.episode.size(), b.episode.edge_count());
    if (ka != kb) return ka < kb;
    return a.episode < b.episode;
  });
}

MiningResult mine(const EventSequence& seq, const MiningConfig& config) {
  config.validate();
  MiningResult result;
  if (seq.empty()) return result;
  const std::size_t cap = config.max_nodes.value_or(kMaxNodes);
  const unsigned threads = config.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : config.threads;
  using Clock = std::chrono::steady_clock;

  EpisodeStore store;
  std::map<EpisodeStore::Level, std::vector<Episode>> pending;
  for (Label l : seq.alphabet().labels()) {
    if (!seq.occurrences(l).empty()) pending[{1, 0}].push_back(Episode::from_canonical({l}, {}));
  }

  auto pending_beyond = [&](EpisodeStore::Level level) {
    return pending.upper_bound(level) != pending.end();
  };

  for (std::size_t n = 1; n <= cap; ++n) {
    const auto start = Clock::now();
    LevelReport report{.nodes = n};
    for (std::size_t m = 0;; ++m) {
      std::vector<Episode> batch;
      if (auto it = pending.find({n, m}); it != pending.end()) {
        batch = std::move(it->second);
        pending.erase(it);
      }
      report.candidates += batch.size();
      auto outcomes = evaluate(batch, seq, config, store, threads);
      for (Outcome& o : outcomes) {
        if (!o.kept) continue;
        const Episode closure = o.record.iclosure;
        const Frequencies freq = o.record.freq;
        if (store.insert(std::move(o.record)).second) ++report.discovered;
        for (Episode& k : o.extra) {
          if (store.insert({std::move(k), closure, freq, true}).second) ++report.intermediates;
        }
      }

      std::vector<const EpisodeRecord*> level;
      for (std::size_t i : store.level(n, m)) level.push_back(&store.at(i));
      for (Episode& c : generate_edge_candidates(level)) pending[{n, m + 1}].push_back(std::move(c));

      const auto more_edges = store.max_edges(n);
      const bool later = pending.lower_bound({n, m + 1}) != pending.lower_bound({n + 1, 0});
      if (!later && (!more_edges || *more_edges <= m)) break;
    }

    if (n < cap) {
      std::vector<Episode> parallel;
      for (std::size_t m = 0; m <= store.max_edges(n).value_or(0); ++m) {
        for (std::size_t i : store.level(n, m)) {
          if (!store.at(i).episode.has_proper_edges()) parallel.push_back(store.at(i).episode);
        }
      }
      for (Episode& c : generate_node_candidates(parallel)) {
        pending[{c.size(), c.edge_count()}].push_back(std::move(c));
      }
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    result.discovered += report.discovered;
    result.intermediates += report.intermediates;
    result.levels.push_back(report);
    if (!pending_beyond({n, kMaxNodes * kMaxNodes}) && store.max_nodes() <= n) break;
  }

  // Every record shares its closure's minimal windows, so any record carries
  // the closure's frequencies.
  std::unordered_map<Episode, Frequencies, EpisodeHash> closures;
  for (const EpisodeRecord& r : store.records()) closures.emplace(r.iclosure, r.freq);

  std::vector<EpisodeRecord> pool;
  std::unordered_set<Episode, EpisodeHash> seen;
  Scanner scanner(seq);
  for (const auto& [c, freq] : closures) {
    if (c.size() <= cap) {
      result.closed.push_back({c, c, freq, false});
      if (seen.insert(c).second) pool.push_back({c, c, freq, false});
      continue;
    }
    // A closure beyond the cap still bounds what lies inside it: an
    // f-closed episode of exactly `cap` nodes is an induced subgraph of its
    // closure, so offer every cap-sized one.
    const Row full = all_nodes(c.size());
    for (Row mask = all_nodes(cap); mask <= full && mask != 0;) {
      Episode sub = c.induced(mask);
      if (seen.insert(sub).second) {
        const auto windows = scanner.minimal_windows(sub, config.window);
        pool.push_back({sub, sub, frequencies(windows, config.window, seq.length()), false});
      }
      // next mask with the same popcount (Gosper's hack)
      const Row lowest = mask & -mask;
      const Row ripple = mask + lowest;
      if (ripple == 0) break;
      mask = (((ripple ^ mask) >> 2) / lowest) | ripple;
    }
  }
  sort_records(result.closed);
  sort_records(pool);
  result.f_closed = f_closure_filter(pool, config.measure);
  return result;
}

}  // namespace episodes
