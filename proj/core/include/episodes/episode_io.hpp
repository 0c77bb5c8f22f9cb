#pragma once

#include <string>
#include <string_view>

#include "episodes/episode.hpp"
#include "episodes/label.hpp"

namespace episodes {

/// Renders `nodes=[a,b,c] edges=[(0,1),(0,2)]` with nodes in canonical order
/// and edges in lexicographic order.
std::string to_string(const Episode& episode, const Alphabet& alphabet);

/// Parses the literal produced by to_string. Node ids in the edge list refer
/// to positions in the node list; the result is canonicalized, so the text
/// need not list nodes in canonical order. Throws ParseError on malformed
/// input, plus the canonicalize errors.
Episode parse_episode(std::string_view text, const Alphabet& alphabet);

}  // namespace episodes
