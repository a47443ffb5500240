#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fgdef {

/// A generator of a free group or its formal inverse.
///
/// Encoded as +(i+1) for generator i and -(i+1) for its inverse. Letters sort
/// with every generator before every inverse, so for a fixed alphabet the
/// order is a < b < ... < A < B < ..., the declared letter order.
class Letter {
 public:
  constexpr Letter() = default;

  static constexpr Letter generator(int index) {
    return Letter(static_cast<std::int8_t>(index + 1));
  }

  constexpr Letter inverse() const { return Letter(static_cast<std::int8_t>(-code_)); }
  constexpr int generator_index() const { return (code_ > 0 ? code_ : -code_) - 1; }
  constexpr bool is_inverse() const { return code_ < 0; }
  constexpr std::int8_t code() const { return code_; }

  // 0 .. 2r-1 within an alphabet of rank r.
  constexpr int ordinal(int rank) const {
    return is_inverse() ? rank + generator_index() : generator_index();
  }

  char symbol() const {
    return static_cast<char>((is_inverse() ? 'A' : 'a') + generator_index());
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter x, Letter y) {
    return x.sort_key() <=> y.sort_key();
  }

 private:
  constexpr explicit Letter(std::int8_t code) : code_(code) {}
  constexpr int sort_key() const { return is_inverse() ? 64 + generator_index() : generator_index(); }

  std::int8_t code_ = 0;
};

constexpr bool cancels(Letter x, Letter y) { return x.code() == -y.code(); }

/// Letters a..z name generators, A..Z their inverses. "1" is the identity.
class Alphabet {
 public:
  static constexpr int kMaxRank = 26;

  explicit Alphabet(int rank);

  int rank() const { return rank_; }
  // k in the counting formulas: number of letters including inverses.
  int size() const { return 2 * rank_; }

  bool contains(Letter x) const;
  Letter letter(int ordinal) const;
  Letter parse_letter(char c) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int rank_;
};

/// An element of a free group as a freely reduced sequence of letters.
/// Immutable once built.
class Word {
 public:
  using size_type = std::size_t;

  Word() = default;

  static Word identity() { return Word(); }
  // Freely reduces the given sequence.
  static Word reduce(std::span<const Letter> raw);
  static Word letter(Letter x) { return Word(std::vector<Letter>{x}); }

  size_type size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](size_type i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  // Every factor of a reduced word is reduced.
  Word subword(size_type pos, size_type len) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  friend class WordBuilder;

  std::vector<Letter> letters_;
};

/// Appends letters with on-the-fly free reduction.
class WordBuilder {
 public:
  WordBuilder() = default;
  explicit WordBuilder(const Word& start) : letters_(start.letters().begin(), start.letters().end()) {}

  WordBuilder& push(Letter x);
  WordBuilder& append(const Word& w);
  WordBuilder& append_inverse(const Word& w);
  Word build() &&;

 private:
  std::vector<Letter> letters_;
};

bool is_reduced(std::span<const Letter> letters);
bool is_cyclically_reduced(std::span<const Letter> letters);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, long exponent);
// [u,v] = u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);
Word conjugate(const Word& u, const Word& by);  // by^-1 u by

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

struct CyclicReduction {
  Word core;
  Word conjugator;  // input = conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& u);

bool is_cyclic_rotation(std::span<const Letter> u, std::span<const Letter> v);
bool is_conjugate(const Word& u, const Word& v);

/// Image in Z^rank under abelianization.
std::vector<long> exponent_sums(const Word& u, int rank);

/// True iff u and v commute, i.e. uv == vu.
bool commute(const Word& u, const Word& v);

/// Parses the textual format and freely reduces it. Whitespace is ignored.
Word parse_word(std::string_view text, const Alphabet& alphabet);
/// As parse_word, but unreduced text is an input error.
Word parse_reduced_word(std::string_view text, const Alphabet& alphabet);

std::string to_string(const Word& w);
std::string to_string(std::span<const Letter> letters);
std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace fgdef
