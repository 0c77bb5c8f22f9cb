#include "episodes/scanner.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace episodes {

bool Scanner::prepare(const Episode& episode, Position floor) {
  const std::size_t n = episode.size();
  occ_.resize(n);
  cursor_.assign(n, 0);
  f_.resize(n);
  floor_.assign(n, floor);
  queued_.assign(n, 1);
  queue_.clear();
  heap_.clear();
  pushed_.assign(n, 0);
  hi_ = 0;
  ++stats_.scans;
  for (NodeId v = 0; v < n; ++v) {
    occ_[v] = seq_->occurrences(episode.label(v));
    if (occ_[v].empty()) return false;
    f_[v] = occ_[v].front();
    queue_.push_back(v);
  }
  return true;
}

bool Scanner::settle(std::span<const Row> skeleton) {
  // Restores f(v) > floor(v) for every node, where floor(w) tracks the
  // latest parent position along skeleton edges.
  std::size_t head = 0;
  while (head < queue_.size()) {
    const NodeId v = queue_[head++];
    queued_[v] = 0;
    const auto occ = occ_[v];
    std::size_t c = cursor_[v];
    while (c < occ.size() && occ[c] <= floor_[v]) {
      ++c;
      ++stats_.event_visits;
    }
    if (c == occ.size()) return false;
    ++stats_.event_visits;
    cursor_[v] = c;
    f_[v] = occ[c];
    if (pushed_[v] != f_[v]) {
      pushed_[v] = f_[v];
      heap_.emplace_back(f_[v], v);
      std::push_heap(heap_.begin(), heap_.end(), std::greater<>{});
      hi_ = std::max(hi_, f_[v]);
    }
    Row out = skeleton[v];
    while (out) {
      const auto w = static_cast<NodeId>(std::countr_zero(out));
      out &= out - 1;
      floor_[w] = std::max(floor_[w], f_[v]);
      if (floor_[w] >= f_[w] && !queued_[w]) {
        queued_[w] = 1;
        queue_.push_back(w);
      }
    }
    // compact the worklist once the consumed prefix dominates
    if (head > 64 && head * 2 > queue_.size()) {
      queue_.erase(queue_.begin(), queue_.begin() + static_cast<std::ptrdiff_t>(head));
      head = 0;
    }
  }
  queue_.clear();
  return true;
}

std::vector<Interval> Scanner::minimal_windows(const Episode& episode, Position rho, const MappingVisitor& visitor) {
  std::vector<Interval> windows;
  if (episode.empty() || !prepare(episode, 0)) return windows;
  const auto skeleton = episode.skeleton_rows();

  while (true) {
    if (!settle(skeleton)) return windows;
    // f only grows, so the running maximum is the current maximum; stale
    // heap entries are those whose node has moved on.
    while (heap_.front().first != f_[heap_.front().second]) {
      std::pop_heap(heap_.begin(), heap_.end(), std::greater<>{});
      heap_.pop_back();
    }
    const auto [lo, first] = heap_.front();
    const Position hi = hi_;

    if (hi - lo < rho) {
      if (!windows.empty() && windows.back().b == hi) windows.pop_back();
      windows.push_back({lo, hi});
      if (visitor) visitor(f_);
    }
    // Restart from the node mapped earliest; every later mapping lives in
    // s[lo + 1, L].
    floor_[first] = f_[first];
    queued_[first] = 1;
    queue_.push_back(first);
  }
}

std::optional<MappingVector> Scanner::greedy_map(const Episode& episode, Position start) {
  if (episode.empty()) return MappingVector{};
  if (!prepare(episode, start - 1)) return std::nullopt;
  const auto skeleton = episode.skeleton_rows();
  if (!settle(skeleton)) return std::nullopt;
  return MappingVector(f_.begin(), f_.end());
}

std::vector<Interval> find_minimal_windows(const Episode& episode, const EventSequence& seq, Position rho) {
  Scanner scanner(seq);
  return scanner.minimal_windows(episode, rho);
}

std::optional<MappingVector> greedy_map(const Episode& episode, const EventSequence& seq, Position start) {
  Scanner scanner(seq);
  return scanner.greedy_map(episode, start);
}

bool covers(const Episode& episode, const EventSequence& seq) { return greedy_map(episode, seq, 1).has_value(); }

std::uint64_t frequency(std::span<const Interval> windows, Position rho, Position length, Measure measure) {
  if (measure == Measure::disjoint) {
    std::uint64_t count = 0;
    Position last_end = std::numeric_limits<Position>::min();
    for (const Interval& w : windows) {
      if (w.a > last_end) {
        ++count;
        last_end = w.b;
      }
    }
    return count;
  }
  // A sliding window starting at a covers [c, d] iff d - rho + 1 <= a <= c.
  const Position lowest = 2 - rho;
  std::uint64_t count = 0;
  Position covered = lowest - 1;
  for (const Interval& w : windows) {
    const Position from = std::max({w.b - rho + 1, covered + 1, lowest});
    const Position to = std::min(w.a, length);
    if (to >= from) count += static_cast<std::uint64_t>(to - from + 1);
    covered = std::max(covered, to);
  }
  return count;
}

Frequencies frequencies(std::span<const Interval> windows, Position rho, Position length) {
  return {frequency(windows, rho, length, Measure::fixed), frequency(windows, rho, length, Measure::disjoint)};
}

}  // namespace episodes
