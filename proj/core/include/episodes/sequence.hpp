#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "episodes/label.hpp"

namespace episodes {

/// 1-based index into an event sequence.
using Position = std::int64_t;

/// Inclusive index pair [a, b].
struct Interval {
  Position a = 0;
  Position b = 0;

  [[nodiscard]] Position width() const { return b - a + 1; }
  friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

/// The mined event string s_1 ... s_L together with, for every label, the
/// sorted list of positions where it occurs.
class EventSequence {
 public:
  EventSequence() = default;

  /// Interns tokens into a fresh alphabet.
  static EventSequence from_tokens(std::span<const std::string> tokens);

  /// Splits on whitespace.
  static EventSequence from_text(const std::string& text);

  /// Uses a caller-supplied alphabet; throws ParseError if a token is missing
  /// from it.
  EventSequence(std::span<const std::string> tokens, Alphabet alphabet);

  EventSequence(std::vector<Label> events, Alphabet alphabet);

  [[nodiscard]] Position length() const { return static_cast<Position>(events_.size()); }
  [[nodiscard]] bool empty() const { return events_.empty(); }
  [[nodiscard]] Label at(Position i) const { return events_[static_cast<std::size_t>(i - 1)]; }
  [[nodiscard]] std::span<const Label> events() const { return events_; }
  [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }

  /// Sorted 1-based positions of `label`.
  [[nodiscard]] std::span<const Position> occurrences(Label label) const;

  /// Smallest i > after with s_i = label, or 0 when none exists.
  [[nodiscard]] Position next_occurrence(Label label, Position after) const;

  /// True when `label` occurs somewhere in s[window.a, window.b].
  [[nodiscard]] bool contains(Label label, Interval window) const;

 private:
  void index();

  std::vector<Label> events_;
  Alphabet alphabet_;
  std::vector<std::vector<Position>> occurrences_;
};

}  // namespace episodes
