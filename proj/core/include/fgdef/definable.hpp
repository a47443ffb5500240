#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fgdef/symbols.hpp"
#include "fgdef/word.hpp"

namespace fgdef {

/// An equation w = 1 over named variables and constant letters.
///
/// Text form: `$x` is a variable, `$X` its inverse (names are a lowercase
/// letter plus optional digits, so `$y2` / `$Y2`), plain letters are
/// constants and "1" is the empty word. Whitespace is ignored.
struct EquationExpr {
  std::vector<std::string> variables;
  SymbolWord symbols;

  friend bool operator==(const EquationExpr&, const EquationExpr&) = default;
};

/// Rejects text that is not reduced as written, e.g. "$x$X" or "aA".
EquationExpr parse_equation(std::string_view text, const Alphabet& alphabet);
std::string to_string(const EquationExpr& eq);

/// Free reduction treating variables as formal letters; adjacent constants
/// are merged.
SymbolWord formally_reduce(std::span<const Symbol> symbols);

/// Reduced value of the left-hand side under `assignment` (indexed like
/// `eq.variables`).
Word evaluate(const EquationExpr& eq, std::span<const Word> assignment);

/// True iff [g,h] is conjugate to [a,b] or to [b,a], with [u,v] = u v u^-1 v^-1.
/// Only defined in rank 2; letters beyond b are an input error.
bool is_basis_pair_f2(const Word& g, const Word& h, const Alphabet& alphabet = Alphabet(2));

/// Greedy descent over the Whitehead automorphisms of F(a,b) applied to the
/// cyclic reduction of w. Returns a cyclic word of minimal length in the
/// automorphic orbit of w's conjugacy class.
Word whitehead_minimize(const Word& w, const Alphabet& alphabet = Alphabet(2));

/// w is primitive iff Whitehead descent reaches a single letter.
bool is_primitive_f2(const Word& w, const Alphabet& alphabet = Alphabet(2));

/// (S1^2 a)^2 a^-2 ((S2 b)^2 b^-2)^-2 with a, b the first two generators,
/// formally reduced. Variables are merged by name.
EquationExpr combine_pair(const EquationExpr& s1, const EquationExpr& s2, const Alphabet& alphabet);

/// Folds the list left to right with combine_pair. Over a free group the
/// result has the same solutions as the whole system.
EquationExpr combine_system_to_single(std::span<const EquationExpr> equations, const Alphabet& alphabet);

/// True iff no assignment other than all-identity, with every value of
/// length <= max_length, solves eq. Exhaustive; refuses with ResourceError
/// when the number of assignments exceeds `budget`.
bool check_trivial_only(const EquationExpr& eq, int max_length, const Alphabet& alphabet,
                        std::uint64_t budget = 100'000'000);

enum class NielsenMove { kSwap, kInvertFirst, kInvertSecond, kMultiplyFirst, kMultiplySecond };

inline constexpr std::array<NielsenMove, 5> kNielsenMoves = {
    NielsenMove::kSwap, NielsenMove::kInvertFirst, NielsenMove::kInvertSecond, NielsenMove::kMultiplyFirst,
    NielsenMove::kMultiplySecond};

using WordPair = std::pair<Word, Word>;

/// kMultiplyFirst: (g, h) -> (gh, h); kMultiplySecond: (g, h) -> (g, hg).
WordPair apply_nielsen(const WordPair& pair, NielsenMove move);

/// All pairs reachable from (a, b) by at most `max_moves` moves, deduplicated
/// and sorted.
std::vector<WordPair> nielsen_closure(int max_moves);

}  // namespace fgdef
