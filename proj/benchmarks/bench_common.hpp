#pragma once

#include <random>
#include <string>
#include <vector>

#include "episodes/sequence.hpp"

namespace bench {

// Zipf-distributed tokens w0..w{sigma-1}
inline episodes::EventSequence zipf_sequence(std::size_t n, std::size_t sigma, std::uint64_t seed) {
  std::vector<double> w(sigma);
  for (std::size_t k = 0; k < sigma; ++k) w[k] = 1.0 / static_cast<double>(k + 1);
  std::discrete_distribution<std::size_t> pick(w.begin(), w.end());
  std::mt19937_64 rng(seed);
  std::vector<std::string> tokens(n);
  for (auto& t : tokens) t = "w" + std::to_string(pick(rng));
  return episodes::EventSequence::from_tokens(tokens);
}

inline episodes::EventSequence uniform_sequence(std::size_t n, std::size_t sigma, std::uint64_t seed) {
  std::uniform_int_distribution<std::size_t> pick(0, sigma - 1);
  std::mt19937_64 rng(seed);
  std::vector<std::string> tokens(n);
  for (auto& t : tokens) t = std::string(1, static_cast<char>('a' + pick(rng)));
  return episodes::EventSequence::from_tokens(tokens);
}

}  // namespace bench
