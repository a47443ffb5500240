#include "fgdef/pieces.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "fgdef/errors.hpp"

namespace fgdef {

namespace {

bool matches_at(std::span<const Letter> u, std::size_t pos, std::span<const Letter> v) {
  return std::equal(v.begin(), v.end(), u.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool inverse_matches_at(std::span<const Letter> u, std::size_t pos, std::span<const Letter> v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (u[pos + i] != v[n - 1 - i].inverse()) return false;
  }
  return true;
}

void collect(std::span<const Letter> u, std::size_t word_index, std::span<const Letter> v,
             std::vector<Occurrence>& out) {
  if (v.size() > u.size()) return;
  for (std::size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
    if (matches_at(u, pos, v)) out.push_back({word_index, pos, Orientation::kForward});
    if (inverse_matches_at(u, pos, v)) out.push_back({word_index, pos, Orientation::kInverted});
  }
}

// Longest common prefix between adjacent suffixes, maximized. Symbols that
// occur once (separators) can never be part of a repeat.
std::size_t longest_repeated_factor(const std::vector<int>& text) {
  const std::size_t n = text.size();
  if (n < 2) return 0;
  std::vector<std::size_t> sa(n);
  std::vector<int> rank(text.begin(), text.end());
  std::vector<int> tmp(n);
  std::iota(sa.begin(), sa.end(), 0);
  for (std::size_t k = 1;; k <<= 1) {
    auto key = [&](std::size_t i) {
      return std::pair<int, int>(rank[i], i + k < n ? rank[i + k] : std::numeric_limits<int>::min());
    };
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    tmp[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) {
      tmp[sa[i]] = tmp[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
    }
    rank = tmp;
    if (static_cast<std::size_t>(rank[sa[n - 1]]) == n - 1) break;
  }
  // Kasai
  std::size_t best = 0;
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(rank[i]);
    if (r == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[r - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    best = std::max(best, h);
    if (h > 0) --h;
  }
  return best;
}

void append_component(std::vector<int>& text, std::span<const Letter> u, int& separator) {
  for (Letter x : u) text.push_back(x.code());
  text.push_back(separator++);
  for (auto it = u.rbegin(); it != u.rend(); ++it) text.push_back(it->inverse().code());
  text.push_back(separator++);
}

constexpr int kFirstSeparator = 1000;

PieceReport report_for_length(std::span<const Word> tuple, std::size_t length) {
  PieceReport report;
  report.length = length;
  if (length == 0) return report;
  for (std::size_t wi = 0; wi < tuple.size(); ++wi) {
    const Word& u = tuple[wi];
    for (std::size_t pos = 0; pos + length <= u.size(); ++pos) {
      Word candidate = u.subword(pos, length);
      auto occ = occurrences(tuple, candidate);
      if (occ.size() >= 2) {
        report.ratio = Rational(static_cast<long>(length), static_cast<long>(tuple[occ[0].word_index].size()));
        report.witness = PieceWitness{std::move(candidate), occ[0], occ[1]};
        return report;
      }
    }
  }
  throw std::logic_error("longest_piece: no witness for computed length");
}

}  // namespace

std::vector<Occurrence> occurrences(std::span<const Word> tuple, const Word& v) {
  if (v.empty()) throw InputError("pieces are non-trivial: empty subword");
  std::vector<Occurrence> out;
  for (std::size_t wi = 0; wi < tuple.size(); ++wi) collect(tuple[wi].letters(), wi, v.letters(), out);
  return out;
}

std::vector<Occurrence> occurrences(const Word& u, const Word& v) {
  return occurrences(std::span<const Word>(&u, 1), v);
}

bool is_piece(std::span<const Word> tuple, const Word& v) { return occurrences(tuple, v).size() >= 2; }

bool is_piece(const Word& u, const Word& v) { return occurrences(u, v).size() >= 2; }

std::size_t longest_piece_length(std::span<const Letter> u) {
  std::vector<int> text;
  text.reserve(2 * u.size() + 2);
  int separator = kFirstSeparator;
  append_component(text, u, separator);
  return longest_repeated_factor(text);
}

std::size_t longest_piece_length(std::span<const Word> tuple) {
  std::vector<int> text;
  int separator = kFirstSeparator;
  for (const Word& u : tuple) append_component(text, u.letters(), separator);
  return longest_repeated_factor(text);
}

PieceReport longest_piece(const Word& u) {
  return report_for_length(std::span<const Word>(&u, 1), longest_piece_length(u.letters()));
}

PieceReport longest_piece_tuple(std::span<const Word> tuple) {
  if (tuple.empty()) throw InputError("longest_piece_tuple: empty tuple");
  return report_for_length(tuple, longest_piece_length(tuple));
}

bool has_piece_of_length(std::span<const Letter> u, std::size_t m) {
  if (m == 0) return true;
  if (m > u.size()) return false;
  const std::size_t windows = u.size() - m + 1;
  for (std::size_t i = 0; i < windows; ++i) {
    auto v = u.subspan(i, m);
    for (std::size_t j = i + 1; j < windows; ++j) {
      if (matches_at(u, j, v) || inverse_matches_at(u, j, v)) return true;
    }
  }
  return false;
}

}  // namespace fgdef
