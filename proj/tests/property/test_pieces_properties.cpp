#include <gtest/gtest.h>

#include <random>

#include "fgdef/genericity.hpp"
#include "fgdef/pieces.hpp"
#include "oracles.hpp"

namespace fgdef {
namespace {

void expect_matches_oracle(const Word& u) {
  const std::string s = to_string(u);
  const std::size_t expected = u.empty() ? 0 : oracle::longest_piece(s);
  const auto report = longest_piece(u);
  ASSERT_EQ(report.length, expected) << s;
  ASSERT_EQ(longest_piece_length(u.letters()), expected) << s;
  ASSERT_EQ(report.witness.has_value(), expected > 0) << s;
  if (report.witness) {
    const auto& wit = *report.witness;
    ASSERT_EQ(wit.subword.size(), expected);
    ASSERT_TRUE(oracle::is_piece({s}, to_string(wit.subword))) << s;
    ASSERT_NE(wit.first, wit.second);
  }
}

TEST(PiecesProperties, ExhaustiveUpToNine) {
  for (int n = 0; n <= 9; ++n) {
    for_each_in_sphere({2, n}, [](std::span<const Letter> w) { expect_matches_oracle(Word::reduce(w)); });
  }
}

TEST(PiecesProperties, RandomTenToTwelve) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 10'000; ++i) {
    expect_matches_oracle(random_word({2, std::uniform_int_distribution<int>(10, 12)(rng)}, rng));
  }
}

TEST(PiecesProperties, TuplesMatchOracle) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 3'000; ++i) {
    std::vector<Word> tuple;
    std::vector<std::string> strings;
    const int m = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < m; ++k) {
      tuple.push_back(random_word({3, std::uniform_int_distribution<int>(0, 7)(rng)}, rng));
      strings.push_back(tuple.back().empty() ? "" : to_string(tuple.back()));
    }
    const std::size_t expected = oracle::longest_piece(strings);
    ASSERT_EQ(longest_piece_tuple(tuple).length, expected);
    ASSERT_EQ(longest_piece_length(std::span<const Word>(tuple)), expected);
  }
}

TEST(PiecesProperties, InverseSymmetry) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 5'000; ++i) {
    const Word u = random_word({2, std::uniform_int_distribution<int>(1, 14)(rng)}, rng);
    const auto r = longest_piece(u);
    ASSERT_EQ(r.length, longest_piece(invert(u)).length);
    ASSERT_LT(r.ratio, 1);
    ASSERT_GE(r.ratio, 0);
    if (r.witness) {
      ASSERT_TRUE(is_piece(u, invert(r.witness->subword)));
    }
    const Word v = u.subword(0, std::uniform_int_distribution<std::size_t>(1, u.size())(rng));
    ASSERT_EQ(is_piece(u, v), is_piece(u, invert(v)));
  }
}

}  // namespace
}  // namespace fgdef
