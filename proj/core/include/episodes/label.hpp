#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace episodes {

/// Interned event symbol. Identifiers are assigned by an Alphabet in the
/// lexicographic order of the symbol strings, so comparing two labels of the
/// same alphabet compares their strings.
struct Label {
  std::uint32_t id = 0;

  friend constexpr auto operator<=>(Label, Label) = default;
};

/// Immutable symbol table. Built once from the full set of symbols so that
/// id order equals string order.
class Alphabet {
 public:
  Alphabet() = default;

  /// Deduplicates and sorts `symbols`.
  explicit Alphabet(std::vector<std::string> symbols);

  [[nodiscard]] std::size_t size() const { return symbols_.size(); }
  [[nodiscard]] bool empty() const { return symbols_.empty(); }

  [[nodiscard]] std::optional<Label> find(std::string_view symbol) const;

  /// Throws ParseError for unknown symbols.
  [[nodiscard]] Label at(std::string_view symbol) const;

  [[nodiscard]] const std::string& name(Label label) const { return symbols_.at(label.id); }

  [[nodiscard]] std::vector<Label> labels() const;
  [[nodiscard]] std::span<const std::string> symbols() const { return symbols_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
};

}  // namespace episodes

template <>
struct std::hash<episodes::Label> {
  std::size_t operator()(episodes::Label l) const noexcept { return std::hash<std::uint32_t>{}(l.id); }
};
