#include <gtest/gtest.h>

#include "fgdef/errors.hpp"
#include "fgdef/word.hpp"

namespace fgdef {
namespace {

const Alphabet kF2(2);
const Alphabet kF3(3);

Word w(std::string_view s, const Alphabet& alphabet = kF3) { return parse_word(s, alphabet); }

TEST(Reduce, CancelsAdjacentPairs) {
  EXPECT_EQ(to_string(w("aA")), "1");
  EXPECT_EQ(to_string(w("abBc")), "ac");
  EXPECT_EQ(to_string(w("abBA")), "1");
}

TEST(Reduce, IsIdempotent) {
  const Word u = w("abBcCAab");
  EXPECT_EQ(Word::reduce(u.letters()), u);
}

TEST(Reduce, UnknownLetterIsInputError) {
  EXPECT_THROW(parse_word("abc", kF2), InputError);
  EXPECT_THROW(parse_word("a?b", kF2), InputError);
}

TEST(Reduce, IdentityAndWhitespace) {
  EXPECT_TRUE(w("1").empty());
  EXPECT_EQ(w(" a b "), w("ab"));
  EXPECT_THROW(parse_word("1a", kF2), InputError);
  EXPECT_THROW(parse_reduced_word("abB", kF2), InputError);
}

TEST(Multiply, Examples) {
  EXPECT_EQ(to_string(w("ab") * w("ba")), "abba");
  EXPECT_EQ(to_string(w("ab") * w("BA")), "1");
  EXPECT_EQ(to_string(w("ab") * w("Bc")), "ac");
}

TEST(Invert, Examples) {
  EXPECT_EQ(to_string(invert(w("ab"))), "BA");
  EXPECT_EQ(to_string(invert(w("1"))), "1");
  EXPECT_EQ(invert(invert(w("abA"))), w("abA"));
}

TEST(Power, PositiveNegativeZero) {
  EXPECT_EQ(power(w("ab"), 3), w("ababab"));
  EXPECT_EQ(power(w("ab"), -2), w("BABA"));
  EXPECT_TRUE(power(w("ab"), 0).empty());
  EXPECT_EQ(power(w("aba"), 2), w("abaaba"));
}

TEST(Commutator, Convention) {
  EXPECT_EQ(commutator(w("a"), w("b")), w("abAB"));
  EXPECT_EQ(commutator(w("b"), w("a")), invert(commutator(w("a"), w("b"))));
  EXPECT_TRUE(commutator(w("a"), w("aa")).empty());
}

TEST(CyclicReduce, Examples) {
  auto cr = cyclic_reduce(w("Bab"));
  EXPECT_EQ(to_string(cr.core), "a");
  EXPECT_EQ(to_string(cr.conjugator), "B");

  cr = cyclic_reduce(w("Aba"));
  EXPECT_EQ(to_string(cr.core), "b");
  EXPECT_EQ(to_string(cr.conjugator), "A");

  cr = cyclic_reduce(w("abAb"));
  EXPECT_EQ(cr.core, w("abAb"));
  EXPECT_TRUE(cr.conjugator.empty());

  cr = cyclic_reduce(w("1"));
  EXPECT_TRUE(cr.core.empty());
  EXPECT_TRUE(cr.conjugator.empty());
}

TEST(CyclicReduce, RecomposesInput) {
  for (const char* s : {"abcAB", "AbaBa", "aabAA", "cabC", "abc"}) {
    const Word u = w(s);
    const auto cr = cyclic_reduce(u);
    EXPECT_EQ(cr.conjugator * cr.core * invert(cr.conjugator), u) << s;
    EXPECT_TRUE(is_cyclically_reduced(cr.core.letters())) << s;
  }
}

TEST(Conjugacy, Examples) {
  EXPECT_TRUE(is_conjugate(w("ab"), w("ba")));
  EXPECT_FALSE(is_conjugate(w("a"), w("b")));
  EXPECT_TRUE(is_conjugate(w("aabAA"), w("b")));
  EXPECT_FALSE(is_conjugate(w("aabAA"), w("ab")));
  EXPECT_TRUE(is_conjugate(w("1"), w("1")));
  EXPECT_FALSE(is_conjugate(w("1"), w("a")));
}

TEST(Conjugacy, ConjugateHelper) {
  EXPECT_EQ(conjugate(w("b"), w("a")), w("Aba"));
}

TEST(ExponentSums, CountsSignedOccurrences) {
  EXPECT_EQ(exponent_sums(w("abAab"), 2), (std::vector<long>{1, 2}));
  EXPECT_EQ(exponent_sums(w("abAB"), 2), (std::vector<long>{0, 0}));
}

TEST(Commute, PowersOfACommonRoot) {
  EXPECT_TRUE(commute(w("ab"), w("abab")));
  EXPECT_FALSE(commute(w("a"), w("b")));
  EXPECT_TRUE(commute(w("1"), w("b")));
}

TEST(Alphabet, RankBounds) {
  EXPECT_THROW(Alphabet(0), InputError);
  EXPECT_THROW(Alphabet(27), InputError);
  EXPECT_EQ(Alphabet(1).size(), 2);
}

TEST(Alphabet, LetterOrder) {
  std::string order;
  for (int i = 0; i < kF2.size(); ++i) order += kF2.letter(i).symbol();
  EXPECT_EQ(order, "abAB");
  EXPECT_LT(Letter::generator(1), Letter::generator(0).inverse());
}

TEST(WordOrder, LexicographicInLetterOrder) {
  EXPECT_LT(w("ab"), w("aA" "b"));  // "aAb" reduces to "b"
  EXPECT_LT(w("ab"), w("aB"));
  EXPECT_LT(w("b"), w("A"));
}

}  // namespace
}  // namespace fgdef
