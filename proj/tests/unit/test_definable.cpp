#include <gtest/gtest.h>

#include "fgdef/definable.hpp"
#include "fgdef/errors.hpp"

namespace fgdef {
namespace {

const Alphabet kF2(2);
const Alphabet kF3(3);

Word w(std::string_view s) { return parse_reduced_word(s, kF2); }
EquationExpr eq(std::string_view s) { return parse_equation(s, kF2); }

TEST(EquationExpr, ParseAndRender) {
  const auto e = eq("$x a $Y2 bb $x");
  EXPECT_EQ(e.variables, (std::vector<std::string>{"x", "y2"}));
  ASSERT_EQ(e.symbols.size(), 5u);
  EXPECT_EQ(e.symbols[2].kind, SymbolKind::kInverseVariable);
  EXPECT_EQ(to_string(e), "$x a $Y2 bb $x");
  EXPECT_EQ(parse_equation(to_string(e), kF2), e);
  EXPECT_EQ(to_string(eq("1")), "1");
  EXPECT_EQ(to_string(eq("$x$y$X$Y")), "$x $y $X $Y");
}

TEST(EquationExpr, RejectsUnreducedAndMalformed) {
  EXPECT_THROW(eq("$x$X"), InputError);
  EXPECT_THROW(eq("$x aA"), InputError);
}

TEST(EquationExpr, MoreMalformed) {
  EXPECT_THROW(eq(""), InputError);
  EXPECT_THROW(eq("$"), InputError);
  EXPECT_THROW(eq("$1"), InputError);
  EXPECT_THROW(eq("1 $x"), InputError);
  EXPECT_THROW(eq("$x c"), InputError);
}

TEST(FormallyReduce, CancelsVariablesAndMergesConstants) {
  const auto e = eq("$x a");
  SymbolWord s = e.symbols;
  s.push_back(Symbol::constant_word(w("A")));
  s.push_back(Symbol::inv(0));
  EXPECT_TRUE(formally_reduce(s).empty());
}

TEST(IsBasisPair, Examples) {
  EXPECT_TRUE(is_basis_pair_f2(w("a"), w("b")));
  EXPECT_TRUE(is_basis_pair_f2(w("a"), w("ab")));
  EXPECT_FALSE(is_basis_pair_f2(w("a"), w("a")));
  EXPECT_TRUE(is_basis_pair_f2(w("b"), w("a")));
  EXPECT_FALSE(is_basis_pair_f2(w("aa"), w("b")));
}

TEST(IsBasisPair, RankTwoOnly) {
  EXPECT_THROW(is_basis_pair_f2(w("a"), w("b"), kF3), InputError);
  EXPECT_THROW(is_basis_pair_f2(parse_word("c", kF3), w("b")), InputError);
}

TEST(IsPrimitive, Examples) {
  EXPECT_TRUE(is_primitive_f2(w("a")));
  EXPECT_TRUE(is_primitive_f2(w("baB")));
  EXPECT_FALSE(is_primitive_f2(w("abAB")));
  EXPECT_FALSE(is_primitive_f2(Word()));
  EXPECT_FALSE(is_primitive_f2(w("aa")));
  EXPECT_TRUE(is_primitive_f2(w("abb")));
  EXPECT_TRUE(is_primitive_f2(w("aab")));
  EXPECT_FALSE(is_primitive_f2(w("aabb")));
  EXPECT_THROW(is_primitive_f2(w("a"), kF3), InputError);
}

TEST(WhiteheadMinimize, ReachesMinimalCyclicLength) {
  EXPECT_EQ(whitehead_minimize(w("abAB")).size(), 4u);
  EXPECT_EQ(whitehead_minimize(w("Bab")).size(), 1u);
  EXPECT_EQ(whitehead_minimize(w("ababb")).size(), 1u);
}

TEST(Combine, SingletonUnchanged) {
  const std::vector<EquationExpr> one{eq("$x a $x")};
  EXPECT_EQ(combine_system_to_single(one, kF2), one[0]);
}

TEST(Combine, TwoAtomicEquations) {
  const std::vector<EquationExpr> xy{eq("$x"), eq("$y")};
  const auto combined = combine_system_to_single(xy, kF2);
  // (x^2 a)^2 a^-2 ((y b)^2 b^-2)^-2 after formal reduction.
  EXPECT_EQ(to_string(combined), "$x $x a $x $x Ab $Y B $Y b $Y B $Y");
  EXPECT_EQ(combined.variables, (std::vector<std::string>{"x", "y"}));
}

TEST(Combine, SharedVariablesMergeByName) {
  const std::vector<EquationExpr> sys{eq("$x $y"), eq("$y b")};
  const auto combined = combine_system_to_single(sys, kF2);
  EXPECT_EQ(combined.variables, (std::vector<std::string>{"x", "y"}));
}

TEST(Combine, Errors) {
  EXPECT_THROW(combine_system_to_single(std::vector<EquationExpr>{}, kF2), InputError);
  const std::vector<EquationExpr> xy{parse_equation("$x", Alphabet(1)), parse_equation("$y", Alphabet(1))};
  EXPECT_THROW(combine_system_to_single(xy, Alphabet(1)), InputError);
}

TEST(CheckTrivialOnly, Examples) {
  const std::vector<EquationExpr> xy{eq("$x"), eq("$y")};
  EXPECT_TRUE(check_trivial_only(combine_system_to_single(xy, kF2), 3, kF2));
  EXPECT_TRUE(check_trivial_only(eq("$x"), 3, kF2));
  EXPECT_FALSE(check_trivial_only(eq("$x $y $X $Y"), 2, kF2));
  EXPECT_FALSE(check_trivial_only(eq("$x a"), 1, kF2));
}

TEST(CheckTrivialOnly, ThreeVariables) {
  const std::vector<EquationExpr> xyz{eq("$x"), eq("$y"), eq("$z")};
  EXPECT_TRUE(check_trivial_only(combine_system_to_single(xyz, kF2), 2, kF2));
}

TEST(CheckTrivialOnly, BudgetAndBounds) {
  EXPECT_THROW(check_trivial_only(eq("$x $y $z"), 4, kF2, 1000), ResourceError);
  EXPECT_THROW(check_trivial_only(eq("$x"), 0, kF2), InputError);
}

TEST(Nielsen, Moves) {
  const WordPair ab{w("a"), w("b")};
  EXPECT_EQ(apply_nielsen(ab, NielsenMove::kSwap), (WordPair{w("b"), w("a")}));
  EXPECT_EQ(apply_nielsen(ab, NielsenMove::kInvertFirst), (WordPair{w("A"), w("b")}));
  EXPECT_EQ(apply_nielsen(ab, NielsenMove::kInvertSecond), (WordPair{w("a"), w("B")}));
  EXPECT_EQ(apply_nielsen(ab, NielsenMove::kMultiplyFirst), (WordPair{w("ab"), w("b")}));
  EXPECT_EQ(apply_nielsen(ab, NielsenMove::kMultiplySecond), (WordPair{w("a"), w("ba")}));
}

TEST(Nielsen, ClosureGrows) {
  EXPECT_EQ(nielsen_closure(0).size(), 1u);
  EXPECT_EQ(nielsen_closure(1).size(), 6u);
  EXPECT_GT(nielsen_closure(3).size(), nielsen_closure(2).size());
}

}  // namespace
}  // namespace fgdef
