#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fgdef/word.hpp"

namespace fgdef {

enum class SymbolKind { kVariable, kInverseVariable, kConstant };

/// One letter of a word over variables and constants: y, y^-1 or a fixed
/// reduced word.
struct Symbol {
  SymbolKind kind = SymbolKind::kVariable;
  std::size_t variable = 0;
  Word constant;

  static Symbol var(std::size_t i) { return {SymbolKind::kVariable, i, {}}; }
  static Symbol inv(std::size_t i) { return {SymbolKind::kInverseVariable, i, {}}; }
  static Symbol oriented(std::size_t i, int orientation) { return orientation < 0 ? inv(i) : var(i); }
  static Symbol constant_word(Word w) { return {SymbolKind::kConstant, 0, std::move(w)}; }

  bool is_variable() const { return kind != SymbolKind::kConstant; }
  Symbol inverse() const;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

using SymbolWord = std::vector<Symbol>;

SymbolWord inverse(const SymbolWord& w);

/// Reduced value under an assignment of the variables.
Word evaluate(std::span<const Symbol> symbols, std::span<const Word> assignment);

/// The letters obtained by substituting without reduction, or nullopt when
/// the result is not reduced as written.
std::optional<Word> evaluate_graphically(std::span<const Symbol> symbols, std::span<const Word> assignment);

}  // namespace fgdef
