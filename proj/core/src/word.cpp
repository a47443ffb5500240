#include "fgdef/word.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "fgdef/errors.hpp"

namespace fgdef {

Alphabet::Alphabet(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw InputError("alphabet rank must be in [1, 26], got " + std::to_string(rank));
  }
}

bool Alphabet::contains(Letter x) const {
  return x.code() != 0 && x.generator_index() < rank_;
}

Letter Alphabet::letter(int ordinal) const {
  if (ordinal < 0 || ordinal >= size()) {
    throw InputError("letter ordinal out of range: " + std::to_string(ordinal));
  }
  return ordinal < rank_ ? Letter::generator(ordinal) : Letter::generator(ordinal - rank_).inverse();
}

Letter Alphabet::parse_letter(char c) const {
  int index = -1;
  bool inv = false;
  if (c >= 'a' && c <= 'z') {
    index = c - 'a';
  } else if (c >= 'A' && c <= 'Z') {
    index = c - 'A';
    inv = true;
  }
  if (index < 0 || index >= rank_) {
    throw InputError(std::string("unknown letter '") + c + "' for rank " + std::to_string(rank_));
  }
  Letter x = Letter::generator(index);
  return inv ? x.inverse() : x;
}

Word Word::reduce(std::span<const Letter> raw) {
  WordBuilder b;
  for (Letter x : raw) b.push(x);
  return std::move(b).build();
}

Word Word::subword(size_type pos, size_type len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  return std::lexicographical_compare_three_way(u.letters_.begin(), u.letters_.end(),
                                                v.letters_.begin(), v.letters_.end());
}

WordBuilder& WordBuilder::push(Letter x) {
  if (!letters_.empty() && cancels(letters_.back(), x)) {
    letters_.pop_back();
  } else {
    letters_.push_back(x);
  }
  return *this;
}

WordBuilder& WordBuilder::append(const Word& w) {
  for (Letter x : w.letters()) push(x);
  return *this;
}

WordBuilder& WordBuilder::append_inverse(const Word& w) {
  auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(it->inverse());
  return *this;
}

Word WordBuilder::build() && { return Word(std::move(letters_)); }

bool is_reduced(std::span<const Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (cancels(letters[i - 1], letters[i])) return false;
  }
  return true;
}

bool is_cyclically_reduced(std::span<const Letter> letters) {
  if (!is_reduced(letters)) return false;
  return letters.size() < 2 || !cancels(letters.front(), letters.back());
}

Word multiply(const Word& u, const Word& v) {
  return std::move(WordBuilder(u).append(v)).build();
}

Word invert(const Word& u) {
  return std::move(WordBuilder().append_inverse(u)).build();
}

Word power(const Word& u, long exponent) {
  WordBuilder b;
  const long times = exponent < 0 ? -exponent : exponent;
  for (long i = 0; i < times; ++i) {
    if (exponent < 0) {
      b.append_inverse(u);
    } else {
      b.append(u);
    }
  }
  return std::move(b).build();
}

Word commutator(const Word& u, const Word& v) {
  return std::move(WordBuilder(u).append(v).append_inverse(u).append_inverse(v)).build();
}

Word conjugate(const Word& u, const Word& by) {
  return std::move(WordBuilder().append_inverse(by).append(u).append(by)).build();
}

CyclicReduction cyclic_reduce(const Word& u) {
  auto ls = u.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && cancels(ls[lo], ls[hi - 1])) {
    ++lo;
    --hi;
  }
  return {u.subword(lo, hi - lo), u.subword(0, lo)};
}

bool is_cyclic_rotation(std::span<const Letter> u, std::span<const Letter> v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  std::vector<Letter> doubled(u.begin(), u.end());
  doubled.insert(doubled.end(), u.begin(), u.end());
  return std::search(doubled.begin(), doubled.end(), v.begin(), v.end()) != doubled.end();
}

bool is_conjugate(const Word& u, const Word& v) {
  return is_cyclic_rotation(cyclic_reduce(u).core.letters(), cyclic_reduce(v).core.letters());
}

std::vector<long> exponent_sums(const Word& u, int rank) {
  std::vector<long> sums(static_cast<std::size_t>(rank), 0);
  for (Letter x : u.letters()) {
    if (x.generator_index() >= rank) throw InputError("letter outside the requested rank");
    sums[static_cast<std::size_t>(x.generator_index())] += x.is_inverse() ? -1 : 1;
  }
  return sums;
}

bool commute(const Word& u, const Word& v) { return multiply(u, v) == multiply(v, u); }

namespace {

std::vector<Letter> parse_letters(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> raw;
  bool saw_one = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '1') {
      saw_one = true;
      continue;
    }
    raw.push_back(alphabet.parse_letter(c));
  }
  if (saw_one && !raw.empty()) {
    throw InputError("'1' denotes the identity and cannot be mixed with letters: " + std::string(text));
  }
  return raw;
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return Word::reduce(parse_letters(text, alphabet));
}

Word parse_reduced_word(std::string_view text, const Alphabet& alphabet) {
  auto raw = parse_letters(text, alphabet);
  if (!is_reduced(raw)) throw InputError("word is not freely reduced: " + std::string(text));
  return Word::reduce(raw);
}

std::string to_string(std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string out;
  out.reserve(letters.size());
  for (Letter x : letters) out.push_back(x.symbol());
  return out;
}

std::string to_string(const Word& w) { return to_string(w.letters()); }

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

}  // namespace fgdef
