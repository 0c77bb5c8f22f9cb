#include "episodes/episode.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "episodes/errors.hpp"

namespace episodes {
namespace {

void check_size(std::size_t n) {
  if (n > kMaxNodes) {
    throw Error("episode has " + std::to_string(n) + " nodes; at most " + std::to_string(kMaxNodes) +
                " are supported");
  }
}

std::vector<Row> rows_from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Row> rows(n, 0);
  for (const Edge& e : edges) {
    if (e.source >= n || e.target >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.source == e.target) throw CycleError("self loop on node " + std::to_string(e.source));
    rows[e.source] |= bit(e.target);
  }
  return rows;
}

void check_acyclic(std::span<const Row> reach) {
  for (NodeId v = 0; v < reach.size(); ++v) {
    if (reach[v] & bit(v)) throw CycleError("edge relation contains a cycle through node " + std::to_string(v));
  }
}

void check_strict(std::span<const Label> labels, std::span<const Row> reach) {
  for (NodeId i = 0; i < labels.size(); ++i) {
    for (NodeId j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j] && !(reach[i] & bit(j)) && !(reach[j] & bit(i))) {
        throw NotStrictError("nodes " + std::to_string(i) + " and " + std::to_string(j) +
                             " share a label but are not ordered");
      }
    }
  }
}

template <typename F>
void for_each_bit(Row row, F&& f) {
  while (row) {
    f(static_cast<NodeId>(std::countr_zero(row)));
    row &= row - 1;
  }
}

}  // namespace

std::vector<Row> reachability(std::span<const Row> successors) {
  std::vector<Row> reach(successors.begin(), successors.end());
  const std::size_t n = reach.size();
  for (NodeId k = 0; k < n; ++k) {
    for (NodeId i = 0; i < n; ++i) {
      if (reach[i] & bit(k)) reach[i] |= reach[k];
    }
  }
  return reach;
}

Episode::Episode(std::vector<Label> labels, std::vector<Row> succ)
    : labels_(std::move(labels)), succ_(std::move(succ)), pred_(labels_.size(), 0) {
  for (NodeId u = 0; u < succ_.size(); ++u) {
    for_each_bit(succ_[u], [&](NodeId v) { pred_[v] |= bit(u); });
  }
}

Episode Episode::trusted(std::vector<Label> labels, std::vector<Row> successors) {
  return Episode(std::move(labels), std::move(successors));
}

Episode Episode::canonicalize(std::span<const Label> labels, std::span<const Edge> raw_edges) {
  const std::size_t n = labels.size();
  check_size(n);
  const auto rows = rows_from_edges(n, raw_edges);
  const auto reach = reachability(rows);
  check_acyclic(reach);
  check_strict(labels, reach);

  // Equal-label nodes form a chain, so counting same-label ancestors gives
  // each node's position inside its chain.
  std::vector<std::size_t> depth(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u = 0; u < n; ++u) {
      if (u != v && labels[u] == labels[v] && (reach[u] & bit(v))) ++depth[v];
    }
  }
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (labels[a] != labels[b]) return labels[a] < labels[b];
    return depth[a] < depth[b];
  });
  std::vector<NodeId> position(n);
  for (NodeId i = 0; i < n; ++i) position[order[i]] = i;

  std::vector<Label> out_labels(n);
  std::vector<Row> out_rows(n, 0);
  for (NodeId i = 0; i < n; ++i) {
    out_labels[i] = labels[order[i]];
    for_each_bit(rows[order[i]], [&](NodeId t) { out_rows[i] |= bit(position[t]); });
  }
  return Episode(std::move(out_labels), std::move(out_rows));
}

Episode Episode::from_canonical(std::vector<Label> labels, std::span<const Edge> edges) {
  const std::size_t n = labels.size();
  check_size(n);
  auto rows = rows_from_edges(n, edges);
  const auto reach = reachability(rows);
  check_acyclic(reach);
  check_strict(labels, reach);
  for (NodeId i = 0; i + 1 < n; ++i) {
    if (labels[i + 1] < labels[i]) throw std::invalid_argument("labels are not sorted");
    if (labels[i + 1] == labels[i] && !(reach[i] & bit(i + 1))) {
      throw std::invalid_argument("equal-label nodes are not in ancestor order");
    }
  }
  return Episode(std::move(labels), std::move(rows));
}

std::size_t Episode::edge_count() const {
  std::size_t m = 0;
  for (Row r : succ_) m += static_cast<std::size_t>(std::popcount(r));
  return m;
}

std::vector<Edge> Episode::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < succ_.size(); ++u) {
    for_each_bit(succ_[u], [&](NodeId v) { out.push_back({u, v}); });
  }
  return out;
}

bool Episode::is_transitively_closed() const {
  for (NodeId u = 0; u < succ_.size(); ++u) {
    bool closed = true;
    for_each_bit(succ_[u], [&](NodeId v) { closed = closed && (succ_[v] & ~succ_[u]) == 0; });
    if (!closed) return false;
  }
  return true;
}

Episode Episode::transitive_closure() const { return Episode(labels_, reachability(succ_)); }

std::vector<Row> Episode::skeleton_rows() const {
  std::vector<Row> skel(succ_.size(), 0);
  for (NodeId v = 0; v < succ_.size(); ++v) {
    Row row = succ_[v];
    for_each_bit(succ_[v], [&](NodeId w) {
      // w is reachable in two steps when some successor of v precedes w.
      if (pred_[w] & succ_[v]) row &= ~bit(w);
    });
    skel[v] = row;
  }
  return skel;
}

std::vector<Edge> Episode::skeleton_edges() const {
  std::vector<Edge> out;
  const auto skel = skeleton_rows();
  for (NodeId v = 0; v < skel.size(); ++v) {
    for_each_bit(skel[v], [&](NodeId w) { out.push_back({v, w}); });
  }
  return out;
}

std::vector<Edge> Episode::proper_skeleton_edges() const {
  auto out = skeleton_edges();
  std::erase_if(out, [&](const Edge& e) { return !is_proper(e); });
  return out;
}

std::optional<Edge> Episode::last_proper_skeleton_edge() const {
  const auto skel = skeleton_rows();
  for (NodeId v = static_cast<NodeId>(skel.size()); v-- > 0;) {
    Row row = skel[v];
    while (row) {
      const auto w = static_cast<NodeId>(63 - std::countl_zero(row));
      if (labels_[v] != labels_[w]) return Edge{v, w};
      row &= ~bit(w);
    }
  }
  return std::nullopt;
}

bool Episode::has_proper_edges() const {
  for (NodeId u = 0; u < succ_.size(); ++u) {
    bool found = false;
    for_each_bit(succ_[u], [&](NodeId v) { found = found || labels_[u] != labels_[v]; });
    if (found) return true;
  }
  return false;
}

bool Episode::lacks_proper_skeleton_edge(NodeId v, std::span<const Row> skeleton) const {
  bool lacks = true;
  for_each_bit(skeleton[v], [&](NodeId w) { lacks = lacks && labels_[w] == labels_[v]; });
  for (NodeId u = 0; u < skeleton.size() && lacks; ++u) {
    if ((skeleton[u] & bit(v)) && labels_[u] != labels_[v]) lacks = false;
  }
  return lacks;
}

std::size_t Episode::rank_within_label(NodeId v) const {
  std::size_t r = 0;
  while (r < v && labels_[v - r - 1] == labels_[v]) ++r;
  return r;
}

Episode Episode::with_edge(Edge e) const { return with_edges(std::span<const Edge>(&e, 1)); }

Episode Episode::with_edges(std::span<const Edge> extra) const {
  auto all = edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return canonicalize(labels_, all);
}

Episode Episode::without_edge(Edge e) const {
  if (e.source >= size() || e.target >= size() || !has_edge(e)) {
    throw std::invalid_argument("edge to remove is not present");
  }
  auto all = edges();
  std::erase(all, e);
  return canonicalize(labels_, all);
}

Episode Episode::with_node(Label label) const {
  std::vector<Label> labels(labels_);
  labels.push_back(label);
  const auto all = edges();
  return canonicalize(labels, all);
}

Episode Episode::with_solitary_nodes(std::span<const Label> extra) const {
  if (extra.empty()) return *this;
  std::vector<Label> added(extra.begin(), extra.end());
  std::sort(added.begin(), added.end());
  for (std::size_t i = 0; i < added.size(); ++i) {
    if ((i > 0 && added[i] == added[i - 1]) || std::binary_search(labels_.begin(), labels_.end(), added[i])) {
      throw NotStrictError("solitary node would share a label with another node");
    }
  }
  const std::size_t n = size() + added.size();
  check_size(n);
  std::vector<Label> labels;
  labels.reserve(n);
  std::vector<NodeId> position(size());
  std::size_t k = 0;
  for (NodeId v = 0; v < size(); ++v) {
    while (k < added.size() && added[k] < labels_[v]) labels.push_back(added[k++]);
    position[v] = static_cast<NodeId>(labels.size());
    labels.push_back(labels_[v]);
  }
  while (k < added.size()) labels.push_back(added[k++]);
  std::vector<Row> rows(n, 0);
  for (NodeId u = 0; u < size(); ++u) {
    for_each_bit(succ_[u], [&](NodeId v) { rows[position[u]] |= bit(position[v]); });
  }
  return Episode(std::move(labels), std::move(rows));
}

Episode Episode::without_node(NodeId v) const {
  if (v >= size()) throw std::invalid_argument("node to remove is not present");
  const Row keep = (size() == kMaxNodes ? ~Row{0} : (bit(static_cast<NodeId>(size())) - 1)) & ~bit(v);
  return induced(keep);
}

Episode Episode::induced(Row keep) const {
  std::vector<Label> labels;
  std::vector<NodeId> position(size(), 0);
  for (NodeId v = 0; v < size(); ++v) {
    if (keep & bit(v)) {
      position[v] = static_cast<NodeId>(labels.size());
      labels.push_back(labels_[v]);
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges()) {
    if ((keep & bit(e.source)) && (keep & bit(e.target))) kept.push_back({position[e.source], position[e.target]});
  }
  // Removing nodes preserves the relative order of the survivors, but a
  // non-closed chain can lose its connecting path; canonicalize validates that.
  return canonicalize(labels, kept);
}

std::size_t Episode::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (Label l : labels_) mix(l.id);
  for (Row r : succ_) mix(r);
  return h;
}

std::optional<std::vector<NodeId>> rank_embedding(const Episode& sub, const Episode& sup) {
  std::vector<NodeId> map(sub.size());
  NodeId j = 0;
  for (NodeId i = 0; i < sub.size(); ++i) {
    const Label l = sub.label(i);
    const std::size_t rank = sub.rank_within_label(i);
    while (j < sup.size() && sup.label(j) < l) ++j;
    // first node of this label in sup, then step by rank
    NodeId first = j;
    if (first + rank >= sup.size() || sup.label(first + static_cast<NodeId>(rank)) != l) return std::nullopt;
    map[i] = first + static_cast<NodeId>(rank);
  }
  return map;
}

namespace {

bool search_injection(const Episode& g, const Episode& h, NodeId v, std::vector<NodeId>& image,
                      const std::vector<NodeId>& first_of_label) {
  if (v == g.size()) return true;
  const Label l = g.label(v);
  // Monotone within a label: the next image follows the previous one.
  NodeId start = first_of_label[v];
  if (v > 0 && g.label(v - 1) == l) start = image[v - 1] + 1;
  for (NodeId w = start; w < h.size() && h.label(w) == l; ++w) {
    bool ok = true;
    for (NodeId u = 0; u < v && ok; ++u) {
      if (g.has_edge(u, v) && !h.has_edge(image[u], w)) ok = false;
      if (g.has_edge(v, u) && !h.has_edge(w, image[u])) ok = false;
    }
    if (!ok) continue;
    image[v] = w;
    if (search_injection(g, h, v + 1, image, first_of_label)) return true;
  }
  return false;
}

}  // namespace

bool is_subepisode(const Episode& g, const Episode& h) {
  if (g.size() > h.size()) return false;
  if (g.size() == h.size()) {
    if (!std::equal(g.labels().begin(), g.labels().end(), h.labels().begin())) return false;
    for (NodeId v = 0; v < g.size(); ++v) {
      if (g.successors(v) & ~h.successors(v)) return false;
    }
    return true;
  }
  std::vector<NodeId> first_of_label(g.size());
  NodeId j = 0;
  for (NodeId v = 0; v < g.size(); ++v) {
    while (j < h.size() && h.label(j) < g.label(v)) ++j;
    if (j == h.size() || h.label(j) != g.label(v)) return false;
    first_of_label[v] = j;
  }
  std::vector<NodeId> image(g.size());
  return search_injection(g, h, 0, image, first_of_label);
}

bool is_proper_subepisode(const Episode& g, const Episode& h) { return g != h && is_subepisode(g, h); }

}  // namespace episodes
