#include "episodes/sequence.hpp"

#include <algorithm>
#include <sstream>

#include "episodes/errors.hpp"

namespace episodes {

EventSequence EventSequence::from_tokens(std::span<const std::string> tokens) {
  Alphabet alphabet(std::vector<std::string>(tokens.begin(), tokens.end()));
  return EventSequence(tokens, std::move(alphabet));
}

EventSequence EventSequence::from_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
  return from_tokens(tokens);
}

EventSequence::EventSequence(std::span<const std::string> tokens, Alphabet alphabet)
    : alphabet_(std::move(alphabet)) {
  events_.reserve(tokens.size());
  for (const auto& tok : tokens) events_.push_back(alphabet_.at(tok));
  index();
}

EventSequence::EventSequence(std::vector<Label> events, Alphabet alphabet)
    : events_(std::move(events)), alphabet_(std::move(alphabet)) {
  for (Label l : events_) {
    if (l.id >= alphabet_.size()) throw ParseError("event label outside the alphabet");
  }
  index();
}

void EventSequence::index() {
  occurrences_.assign(alphabet_.size(), {});
  for (std::size_t i = 0; i < events_.size(); ++i) {
    occurrences_[events_[i].id].push_back(static_cast<Position>(i + 1));
  }
}

std::span<const Position> EventSequence::occurrences(Label label) const {
  if (label.id >= occurrences_.size()) return {};
  return occurrences_[label.id];
}

Position EventSequence::next_occurrence(Label label, Position after) const {
  const auto occ = occurrences(label);
  auto it = std::upper_bound(occ.begin(), occ.end(), after);
  return it == occ.end() ? 0 : *it;
}

bool EventSequence::contains(Label label, Interval window) const {
  const Position p = next_occurrence(label, window.a - 1);
  return p != 0 && p <= window.b;
}

}  // namespace episodes
