#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "fgdef/errors.hpp"
#include "fgdef/genericity.hpp"
#include "fgdef/sphere_cache.hpp"
#include "oracles.hpp"

namespace fgdef {
namespace {

const Rational kHalf(1, 2);

TEST(SphereCount, Examples) {
  EXPECT_EQ(sphere_count({2, 1}), 4);
  EXPECT_EQ(sphere_count({2, 3}), 36);
  EXPECT_EQ(sphere_count({3, 2}), 30);
  EXPECT_EQ(sphere_count({2, 0}), 1);
}

TEST(SphereCount, MatchesBruteForceEnumeration) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(sphere_count({2, n}), oracle::sphere(2, n).size()) << n;
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(sphere_count({3, n}), oracle::sphere(3, n).size()) << n;
}

TEST(BallSize, Examples) {
  EXPECT_EQ(ball_size({2, 1}), 5);
  EXPECT_EQ(ball_size({2, 3}), 53);
  EXPECT_EQ(ball_size_without_identity({2, 3}), 52);
  EXPECT_EQ(ball_size({2, 0}), 1);
}

TEST(BallSpec, Validation) {
  EXPECT_THROW(sphere_count({1, 2}), InputError);
  EXPECT_THROW(sphere_count({2, -1}), InputError);
}

TEST(EnumerateSphere, DeclaredLetterOrder) {
  std::vector<std::string> got;
  for (const auto& w : enumerate_sphere({2, 1})) got.push_back(to_string(w));
  EXPECT_EQ(got, (std::vector<std::string>{"a", "b", "A", "B"}));

  const auto zero = enumerate_sphere({2, 0});
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].empty());
}

TEST(EnumerateSphere, MatchesOracleOrder) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::string> got;
    for (const auto& w : enumerate_sphere({2, n})) got.push_back(to_string(w));
    EXPECT_EQ(got, oracle::sphere(2, n)) << n;
  }
}

TEST(SpherePrefixes, ConcatenationReproducesSphere) {
  const BallSpec spec{2, 5};
  std::vector<Word> joined;
  for (const auto& prefix : sphere_prefixes(spec, 2)) {
    for_each_in_sphere(spec, prefix, [&](std::span<const Letter> w) { joined.push_back(Word::reduce(w)); });
  }
  EXPECT_EQ(joined, enumerate_sphere(spec));
}

TEST(RandomWord, ReducedOfRequestedLength) {
  std::mt19937_64 rng(7);
  std::set<Word> seen;
  for (int i = 0; i < 500; ++i) {
    const Word w = random_word({2, 3}, rng);
    EXPECT_EQ(w.size(), 3u);
    seen.insert(w);
  }
  EXPECT_EQ(seen.size(), 36u);
}

TEST(PieceThreshold, Ceiling) {
  EXPECT_EQ(piece_threshold(5, kHalf), 3u);
  EXPECT_EQ(piece_threshold(6, kHalf), 3u);
  EXPECT_EQ(piece_threshold(7, Rational(1, 3)), 3u);
}

TEST(CountPieceRich, Examples) {
  EXPECT_EQ(count_piece_rich({2, 2}, kHalf), 4u);
  EXPECT_EQ(count_piece_rich({2, 1}, 1), 0u);
  EXPECT_EQ(count_piece_rich({2, 6}, kHalf), 148u);
}

TEST(CountPieceRich, MatchesBruteForce) {
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t expected = 0;
    for (const auto& w : oracle::sphere(2, n)) {
      if (oracle::longest_piece(w) * 2 >= static_cast<std::size_t>(n)) ++expected;
    }
    EXPECT_EQ(count_piece_rich({2, n}, kHalf), expected) << n;
  }
}

TEST(CountPieceRich, EpsOutOfRange) {
  EXPECT_THROW(count_piece_rich({2, 3}, 0), InputError);
  EXPECT_THROW(count_piece_rich({2, 3}, Rational(3, 2)), InputError);
}

TEST(CountPieceRich, ParallelMatchesSequential) {
  EnumerationOptions parallel;
  parallel.parallelism = 4;
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(count_piece_rich({2, n}, kHalf, parallel), count_piece_rich({2, n}, kHalf)) << n;
  }
}

TEST(CountPieceRich, BudgetRefusal) {
  EnumerationOptions tight;
  tight.word_budget = 100;
  EXPECT_THROW(count_piece_rich({2, 6}, kHalf, tight), ResourceError);
}

TEST(DensityReport, SingleRow) {
  const std::vector<int> radii{1};
  const auto report = density_report(2, radii, kHalf);
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].hits, 0u);
  EXPECT_EQ(report.rows[0].rho, 0);
}

TEST(DensityReport, EpsOneGivesZeroDensity) {
  const std::vector<int> radii{1, 2, 3, 4, 5, 6};
  for (const auto& row : density_report(2, radii, 1).rows) EXPECT_EQ(row.rho, 0) << row.n;
}

TEST(DensityReport, FrozenFixtures) {
  // Per-length hit counts and cumulative counts from exhaustive enumeration.
  const std::vector<std::uint64_t> hits{0, 4, 4, 28, 28, 148, 148, 684};
  const std::vector<std::uint64_t> cumulative{0, 4, 8, 36, 64, 212, 360, 1044};
  const std::vector<int> radii{1, 2, 3, 4, 5, 6, 7, 8};
  const auto report = density_report(2, radii, kHalf);
  ASSERT_EQ(report.rows.size(), 8u);
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& row = report.rows[i];
    EXPECT_EQ(row.hits, hits[i]);
    EXPECT_EQ(row.cumulative_hits, cumulative[i]);
    EXPECT_EQ(row.rho, Rational(BigInt(cumulative[i]), row.ball));
    EXPECT_EQ(row.rho_sphere, Rational(BigInt(hits[i]), row.sphere));
  }
  EXPECT_EQ(report.rows[7].rho, Rational(1044, 13121));
  EXPECT_EQ(report.c1_argmax, 2);  // s_2 = 3/17
}

TEST(DensityReport, BallRecurrence) {
  const std::vector<int> radii{1, 2, 3, 4, 5};
  const auto report = density_report(2, radii, kHalf);
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    EXPECT_EQ(report.rows[i].ball, report.rows[i - 1].ball + report.rows[i].sphere);
  }
}

TEST(DensityReport, RadiiValidationAndBudget) {
  const std::vector<int> bad{3, 2};
  EXPECT_THROW(density_report(2, bad, kHalf), InputError);
  const std::vector<int> big{20};
  EnumerationOptions options;
  options.word_budget = 10'000;
  try {
    density_report(2, big, kHalf, options);
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.max_feasible(), 7);  // ball of radius 7 minus identity: 4372 words
  }
}

TEST(DensityReport, Csv) {
  const std::vector<int> radii{1, 2};
  const auto csv = to_csv(density_report(2, radii, kHalf));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,sphere,ball,hits,rho_num,rho_den,bound");
  EXPECT_NE(csv.find("\n2,12,17,4,4,17,"), std::string::npos);
}

TEST(PowerSums, Examples) {
  EXPECT_EQ(power_sum_linear(kHalf, 3), Rational(11, 8));
  EXPECT_EQ(power_sum_quadratic(kHalf, 2), Rational(3, 2));
  EXPECT_EQ(power_sum_linear(2, 1), 2);
}

TEST(PowerSums, SingularAndInvalid) {
  EXPECT_THROW(power_sum_linear(1, 3), SingularInputError);
  EXPECT_THROW(power_sum_quadratic(1, 3), SingularInputError);
  EXPECT_THROW(power_sum_linear(kHalf, 0), InputError);
}

TEST(PowerSums, MatchDirectSummation) {
  for (const Rational& z : {Rational(1, 2), Rational(2), Rational(-1, 3), Rational(5, 7)}) {
    for (int n = 1; n <= 20; ++n) {
      EXPECT_EQ(power_sum_linear(z, n), oracle::direct_power_sum(z, n, 1));
      EXPECT_EQ(power_sum_quadratic(z, n), oracle::direct_power_sum(z, n, 2));
    }
  }
}

class SphereCacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("fgdef_cache_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(SphereCacheTest, StoreLoadRoundTrip) {
  SphereCache cache(dir_);
  EXPECT_FALSE(cache.load({2, 3}));
  const auto words = enumerate_sphere({2, 3});
  cache.store({2, 3}, words);
  EXPECT_EQ(cache.file_for({2, 3}).filename(), "sphere_r2_n3.txt");
  EXPECT_EQ(cache.load({2, 3}), words);
}

TEST_F(SphereCacheTest, CacheHitMatchesColdCount) {
  SphereCache cache(dir_);
  EnumerationOptions cached;
  cached.cache = &cache;
  for (int n = 1; n <= 7; ++n) {
    const auto cold = count_piece_rich({2, n}, kHalf);
    EXPECT_EQ(count_piece_rich({2, n}, kHalf, cached), cold);  // fills the cache
    EXPECT_EQ(count_piece_rich({2, n}, kHalf, cached), cold);  // reads it back
  }
}

TEST_F(SphereCacheTest, CorruptFileRejected) {
  SphereCache cache(dir_);
  std::ofstream(cache.file_for({2, 2})) << "ab\nba\n";
  EXPECT_THROW(cache.load({2, 2}), InputError);
}

}  // namespace
}  // namespace fgdef
