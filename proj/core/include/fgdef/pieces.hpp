#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fgdef/rational.hpp"
#include "fgdef/word.hpp"

namespace fgdef {

enum class Orientation { kForward, kInverted };

/// One way a subword v appears inside a tuple of words: v itself starts at
/// `position` of component `word_index`, or (kInverted) v^-1 starts there.
struct Occurrence {
  std::size_t word_index = 0;
  std::size_t position = 0;
  Orientation orientation = Orientation::kForward;

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

struct PieceWitness {
  Word subword;
  Occurrence first;
  Occurrence second;
};

/// Longest piece of a word or tuple.
///
/// The witness is canonical: the earliest (component, position) at which a
/// maximal piece starts, paired with its next occurrence in
/// (component, position, orientation) order.
struct PieceReport {
  std::size_t length = 0;
  std::optional<PieceWitness> witness;
  Rational ratio = 0;
};

/// All occurrences of v and v^-1 in u, sorted. Overlaps are reported.
std::vector<Occurrence> occurrences(const Word& u, const Word& v);
std::vector<Occurrence> occurrences(std::span<const Word> tuple, const Word& v);

/// v is a piece iff it has at least two distinct occurrences.
bool is_piece(const Word& u, const Word& v);
bool is_piece(std::span<const Word> tuple, const Word& v);

PieceReport longest_piece(const Word& u);
PieceReport longest_piece_tuple(std::span<const Word> tuple);

/// Length of the longest piece, via a suffix array over the components and
/// their inverses joined by distinct separators.
std::size_t longest_piece_length(std::span<const Letter> u);
std::size_t longest_piece_length(std::span<const Word> tuple);

/// True iff u has a piece of length exactly m (equivalently, >= m).
/// m == 0 is vacuously true. Intended for enumeration hot loops.
bool has_piece_of_length(std::span<const Letter> u, std::size_t m);

}  // namespace fgdef
