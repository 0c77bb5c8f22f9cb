#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "episodes/episode.hpp"
#include "episodes/episode_io.hpp"
#include "episodes/sequence.hpp"

namespace episodes {

// gtest printer; label ids stand in for names since no alphabet is at hand
inline void PrintTo(const Episode& g, std::ostream* os) {
  *os << "nodes=[";
  for (std::size_t i = 0; i < g.size(); ++i) *os << (i ? "," : "") << g.label(static_cast<NodeId>(i)).id;
  *os << "] edges=[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    *os << (first ? "" : ",") << '(' << e.source << ',' << e.target << ')';
    first = false;
  }
  *os << ']';
}

}  // namespace episodes

namespace episodes::testing {

inline EventSequence seq(const std::string& text) { return EventSequence::from_text(text); }

inline Episode ep(const EventSequence& s, const std::string& literal) { return parse_episode(literal, s.alphabet()); }

inline Episode ep(const Alphabet& a, const std::string& literal) { return parse_episode(literal, a); }

// s1 of Example 3, s3 of Example 8
inline const std::string kS1 = "a b c b d a c b c d";
inline const std::string kS2 = "a x b y a x b";
inline const std::string kS3 = "a c b x x a b c x x b a c";

inline const std::string kDiamond = "nodes=[a,b,c,d] edges=[(0,1),(0,2),(0,3),(1,3),(2,3)]";

/// Random text over the first `sigma` letters of "abcd...".
inline std::string random_text(std::mt19937_64& rng, int length, int sigma) {
  std::uniform_int_distribution<int> pick(0, sigma - 1);
  std::string out;
  for (int i = 0; i < length; ++i) {
    if (i) out += ' ';
    out += static_cast<char>('a' + pick(rng));
  }
  return out;
}

}  // namespace episodes::testing
