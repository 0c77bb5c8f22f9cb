#include "episodes/store.hpp"

namespace episodes {

std::pair<std::size_t, bool> EpisodeStore::insert(EpisodeRecord record) {
  if (auto it = index_.find(record.episode); it != index_.end()) return {it->second, false};
  const std::size_t i = records_.size();
  const Episode& g = record.episode;
  index_.emplace(g, i);
  levels_[{g.size(), g.edge_count()}].push_back(i);
  by_labels_[std::vector<Label>(g.labels().begin(), g.labels().end())].push_back(i);
  records_.push_back(std::move(record));
  return {i, true};
}

const EpisodeRecord* EpisodeStore::find(const Episode& episode) const {
  auto it = index_.find(episode);
  return it == index_.end() ? nullptr : &records_[it->second];
}

std::span<const std::size_t> EpisodeStore::level(std::size_t nodes, std::size_t edges) const {
  auto it = levels_.find({nodes, edges});
  if (it == levels_.end()) return {};
  return it->second;
}

std::span<const std::size_t> EpisodeStore::with_labels(std::span<const Label> labels) const {
  auto it = by_labels_.find(std::vector<Label>(labels.begin(), labels.end()));
  if (it == by_labels_.end()) return {};
  return it->second;
}

std::optional<std::size_t> EpisodeStore::max_edges(std::size_t nodes) const {
  auto it = levels_.lower_bound({nodes + 1, 0});
  if (it == levels_.begin()) return std::nullopt;
  --it;
  if (it->first.first != nodes) return std::nullopt;
  return it->first.second;
}

std::size_t EpisodeStore::max_nodes() const { return levels_.empty() ? 0 : levels_.rbegin()->first.first; }

}  // namespace episodes
