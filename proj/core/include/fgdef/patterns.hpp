#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fgdef/rational.hpp"
#include "fgdef/symbols.hpp"
#include "fgdef/word.hpp"

namespace fgdef {

using PatternSymbol = Symbol;

/// p_coordinate = symbols, read without cancellation.
struct PatternEquation {
  std::size_t coordinate = 0;
  std::vector<PatternSymbol> symbols;

  friend bool operator==(const PatternEquation&, const PatternEquation&) = default;
};

/// A cancellation-free system p_j = w_tj(y_1..y_n) over m coordinates.
/// The first equation listed for a coordinate is its w_1j. Free coordinates
/// range over the whole group and carry no equations.
struct PatternSystem {
  std::vector<std::string> variables;
  std::size_t coordinates = 1;
  std::vector<std::size_t> free;
  std::vector<PatternEquation> equations;

  bool is_free(std::size_t coordinate) const;
  const PatternEquation* first_equation(std::size_t coordinate) const;

  friend bool operator==(const PatternSystem&, const PatternSystem&) = default;
};

/// Structural problems, one message each; empty when the system is valid.
/// The piece condition depends on the target tuple and is checked by
/// match_pattern instead.
std::vector<std::string> validate_pattern(const PatternSystem& system);

/// Number of variable occurrences plus constant letters.
std::size_t symbol_length(const PatternEquation& equation);
std::size_t constant_length(const PatternEquation& equation);

struct PieceFlag {
  std::size_t coordinate = 0;
  std::size_t variable = 0;
  bool is_piece = false;
};

struct MatchResult {
  std::vector<Word> assignment;  // indexed like PatternSystem::variables
  std::vector<PieceFlag> piece_flags;  // variables of each w_1j
};

/// Finds an assignment of non-empty words making every equation hold letter
/// for letter, with every variable of each w_1j a piece of the tuple.
/// Boundaries are tried left to right, shortest first; the first assignment
/// passing the piece filter is returned.
std::optional<MatchResult> match_pattern(const PatternSystem& system, std::span<const Word> tuple);

/// The tuple an assignment spells: each constrained coordinate is its w_1
/// substituted graphically, and every other equation of the coordinate must
/// spell the same word. Free coordinates take `free_values[j]`. Returns
/// nullopt if some substitution cancels or two equations disagree. The
/// piece condition is not checked.
std::optional<std::vector<Word>> instantiate(const PatternSystem& system, std::span<const Word> assignment,
                                             std::span<const Word> free_values = {});

bool member_of_multipattern(std::span<const PatternSystem> systems, std::span<const Word> tuple);

/// 1/m where m is the symbol length of the coordinate's w_1.
Rational pattern_ratio_bound(const PatternSystem& system, std::size_t coordinate);

inline Word evaluate(const PatternEquation& equation, std::span<const Word> assignment) {
  return evaluate(equation.symbols, assignment);
}
inline std::optional<Word> evaluate_graphically(const PatternEquation& equation, std::span<const Word> assignment) {
  return evaluate_graphically(equation.symbols, assignment);
}

struct NegligibilityRow {
  std::size_t length = 0;
  std::uint64_t at_or_above = 0;
  std::uint64_t below = 0;
};

struct NegligibilitySummary {
  Rational eps;
  std::uint64_t at_or_above = 0;
  std::uint64_t below = 0;
  std::vector<NegligibilityRow> by_length;  // ascending length
  std::vector<Word> exceptions;             // words below eps, capped
  bool exceptions_truncated = false;
};

/// Streams words and tallies longest-piece ratio >= eps against below.
class NegligibilityAccumulator {
 public:
  explicit NegligibilityAccumulator(Rational eps, std::size_t exception_cap = 100);

  void add(const Word& word);
  const NegligibilitySummary& summary() const { return summary_; }

 private:
  std::size_t cap_;
  NegligibilitySummary summary_;
};

NegligibilitySummary negligibility_report(std::span<const Word> words, const Rational& eps,
                                          std::size_t exception_cap = 100);

/// x y x y^2 x ... x y^i x, reduced. x and y must not commute.
Word witness_family(const Word& x, const Word& y, int i);

}  // namespace fgdef
