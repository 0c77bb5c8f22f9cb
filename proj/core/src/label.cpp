#include "episodes/label.hpp"

#include <algorithm>

#include "episodes/errors.hpp"

namespace episodes {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  std::sort(symbols_.begin(), symbols_.end());
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
}

std::optional<Label> Alphabet::find(std::string_view symbol) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end() || *it != symbol) return std::nullopt;
  return Label{static_cast<std::uint32_t>(it - symbols_.begin())};
}

Label Alphabet::at(std::string_view symbol) const {
  if (auto l = find(symbol)) return *l;
  throw ParseError("unknown symbol '" + std::string(symbol) + "'");
}

std::vector<Label> Alphabet::labels() const {
  std::vector<Label> out(symbols_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Label{static_cast<std::uint32_t>(i)};
  return out;
}

}  // namespace episodes
