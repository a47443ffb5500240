#include <gtest/gtest.h>

#include <random>

#include "fgdef/cuteq.hpp"
#include "fgdef/cuteq_json.hpp"
#include "fgdef/genericity.hpp"
#include "oracles.hpp"
#include "random_ge.hpp"

namespace fgdef {
namespace {

const Alphabet kF2(2);

std::vector<std::string> as_strings(std::span<const Word> ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(to_string(w));
  return out;
}

std::vector<Word> random_values(std::mt19937_64& rng, std::size_t count, int max_length) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_word({2, std::uniform_int_distribution<int>(1, max_length)(rng)}, rng));
  }
  return out;
}

// Every tuple of non-empty items of length <= 2, for rho <= 3.
void for_each_item_tuple(std::size_t rho, const std::function<void(const std::vector<Word>&)>& visit) {
  std::vector<Word> words;
  for (int n = 1; n <= 2; ++n) {
    for (auto& w : enumerate_sphere({2, n})) words.push_back(std::move(w));
  }
  std::vector<std::size_t> idx(rho, 0);
  std::vector<Word> items(rho);
  while (true) {
    for (std::size_t i = 0; i < rho; ++i) items[i] = words[idx[i]];
    visit(items);
    std::size_t i = 0;
    while (i < rho && ++idx[i] == words.size()) idx[i++] = 0;
    if (i == rho) return;
  }
}

TEST(CutEquationProperties, SolutionsAgreeWithOracleAndInduceGraphicalSolutions) {
  std::mt19937_64 rng(41);
  std::size_t solutions = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto ge = oracle::random_ge(rng, 3);
    ge.validate();
    const auto build = build_cut_equation(ge);
    for_each_item_tuple(ge.items, [&](const std::vector<Word>& items) {
      const bool solves = is_solution(ge, items);
      ASSERT_EQ(solves, oracle::ge_solves(ge, as_strings(items)));
      if (!solves) return;
      ++solutions;
      const auto induced = induced_solution(build, ge, items);
      const auto graphical = check_solution(build.equation, induced.beta, induced.alpha, SolutionMode::kGraphical);
      ASSERT_TRUE(graphical.ok) << "trial " << trial;
      ASSERT_TRUE(check_solution(build.equation, induced.beta, induced.alpha, SolutionMode::kGroup).ok);
    });
  }
  EXPECT_GT(solutions, 0u);
}

TEST(CutEquationProperties, GraphicalImpliesGroup) {
  std::mt19937_64 rng(42);
  std::size_t graphical = 0;
  for (int trial = 0; trial < 5'000; ++trial) {
    const auto cut = oracle::random_cut_equation(rng);
    const auto& eq = cut.equation;
    const auto alpha = random_values(rng, eq.vars.size(), 3);
    // Fitted beta is a group solution; the graphical check then decides
    // whether f_M also reads without cancellation.
    const auto beta = oracle::fit_beta(cut, random_values(rng, cut.shared, 2), alpha);
    const auto g = check_solution(eq, beta, alpha, SolutionMode::kGraphical);
    const auto grp = check_solution(eq, beta, alpha, SolutionMode::kGroup);
    ASSERT_TRUE(grp.ok);
    if (g.ok) ++graphical;
    for (std::size_t i = 0; i < eq.intervals.size(); ++i) {
      if (g.interval_ok[i]) ASSERT_TRUE(grp.interval_ok[i]);
    }
    // A perturbed beta that is graphical must be group as well.
    auto bad = beta;
    bad.back() = bad.back() * random_word({2, 1}, rng);
    const auto g2 = check_solution(eq, bad, alpha, SolutionMode::kGraphical);
    if (g2.ok) ASSERT_TRUE(check_solution(eq, bad, alpha, SolutionMode::kGroup).ok);
  }
  EXPECT_GT(graphical, 0u);
}

TEST(CutEquationProperties, EliminationRemovesOnlySingleOccurrenceIntervals) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 5'000; ++trial) {
    const auto eq = oracle::random_cut_equation(rng).equation;
    const auto result = eliminate_single_occurrence(eq);
    ASSERT_LE(result.trace.size(), eq.intervals.size());
    ASSERT_EQ(result.kept.size() + result.trace.size(), eq.intervals.size());

    std::vector<bool> alive(eq.intervals.size(), true);
    for (const auto& step : result.trace) {
      ASSERT_TRUE(alive[step.interval]);
      std::size_t count = 0;
      bool in_interval = false;
      for (std::size_t i = 0; i < eq.intervals.size(); ++i) {
        if (!alive[i]) continue;
        for (const auto& s : eq.intervals[i].fm) {
          if (s.is_variable() && s.variable == step.variable) {
            ++count;
            in_interval = in_interval || i == step.interval;
          }
        }
      }
      ASSERT_EQ(count, 1u);
      ASSERT_TRUE(in_interval);
      alive[step.interval] = false;
    }
    for (auto c : occurrence_counts(result.reduced)) ASSERT_NE(c, 1u);
  }
}

TEST(CutEquationProperties, ExtensionIsSound) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 5'000; ++trial) {
    const auto cut = oracle::random_cut_equation(rng);
    const auto& eq = cut.equation;
    const auto result = eliminate_single_occurrence(eq);
    // Any alpha with fitted beta solves the kept intervals; scramble the
    // owned params of dropped intervals, whose values are then arbitrary.
    const auto alpha = random_values(rng, eq.vars.size(), 3);
    auto beta = oracle::fit_beta(cut, random_values(rng, cut.shared, 2), alpha);
    for (const auto& step : result.trace) beta[cut.shared + step.interval] = random_word({2, 3}, rng);
    ASSERT_TRUE(check_solution(result.reduced, beta, alpha, SolutionMode::kGroup).ok || result.reduced.intervals.empty());
    const auto extended = extend_group_solution(eq, result, beta, alpha);
    ASSERT_TRUE(check_solution(eq, beta, extended, SolutionMode::kGroup).ok) << "trial " << trial;
  }
}

TEST(CutEquationProperties, JsonRoundTrip) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 500; ++trial) {
    const auto eq = oracle::random_cut_equation(rng).equation;
    const auto again = parse_cut_equation(to_json(eq), kF2);
    ASSERT_EQ(to_json(again), to_json(eq));
    const auto built = build_cut_equation(oracle::random_ge(rng));
    ASSERT_EQ(to_json(parse_cut_equation(to_json(built.equation), kF2)), to_json(built.equation));
  }
}

}  // namespace
}  // namespace fgdef
