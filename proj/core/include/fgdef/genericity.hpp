#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fgdef/rational.hpp"
#include "fgdef/word.hpp"

namespace fgdef {

class SphereCache;

/// Sphere or ball of radius n in the Cayley graph of the free group of rank r.
struct BallSpec {
  int rank = 2;
  int radius = 0;

  int letters() const { return 2 * rank; }  // k
  void validate() const;
};

/// k(k-1)^(n-1) reduced words of length n; 1 for n = 0.
BigInt sphere_count(const BallSpec& spec);
/// Exact number of reduced words of length <= n, identity included.
BigInt ball_size(const BallSpec& spec);
/// (k/(k-2))((k-1)^n - 1): the textbook closed form, which leaves out the
/// identity. Equals ball_size - 1.
BigInt ball_size_without_identity(const BallSpec& spec);

using LetterVisitor = std::function<void(std::span<const Letter>)>;

/// Visits each reduced word of length n once, lexicographically in declared
/// letter order (a < b < ... < A < B < ...).
void for_each_in_sphere(const BallSpec& spec, const LetterVisitor& visit);
/// Restricted to words starting with `prefix` (which must be reduced).
void for_each_in_sphere(const BallSpec& spec, std::span<const Letter> prefix, const LetterVisitor& visit);

std::vector<Word> enumerate_sphere(const BallSpec& spec);

/// Uniformly random element of the sphere.
Word random_word(const BallSpec& spec, std::mt19937_64& rng);

/// Reduced prefixes of the given length in lexicographic order. Concatenating
/// the per-prefix enumerations reproduces for_each_in_sphere exactly.
std::vector<std::vector<Letter>> sphere_prefixes(const BallSpec& spec, int length);

struct EnumerationOptions {
  unsigned parallelism = 1;
  // Upper bound on the number of words a single request may enumerate.
  std::uint64_t word_budget = 100'000'000;
  const SphereCache* cache = nullptr;
};

/// m = ceil(eps * n): the piece length a word of length n needs.
std::size_t piece_threshold(int length, const Rational& eps);

/// Number of length-n reduced words whose longest piece is >= ceil(eps*n).
std::uint64_t count_piece_rich(const BallSpec& spec, const Rational& eps,
                               const EnumerationOptions& options = {});

struct DensityRow {
  int n = 0;
  BigInt sphere;
  BigInt ball;
  std::uint64_t hits = 0;             // piece-rich words of length n
  std::uint64_t cumulative_hits = 0;  // piece-rich words of length <= n
  Rational rho;                       // cumulative_hits / ball
  Rational rho_sphere;                // hits / sphere
  // s_n = rho * (k-1)^(eps n) / n^2 is irrational in general. With eps = p/q
  // it is kept exactly as s_n^q; `scaled` is its floating value.
  Rational scaled_power;
  double scaled = 0.0;
  double bound = 0.0;  // C1 * n^2 / (k-1)^(eps n)
  bool decreasing = false;  // rho < rho of the previous row
};

struct DensityReport {
  int rank = 2;
  Rational eps;
  unsigned root = 1;  // q, the denominator of eps
  std::vector<DensityRow> rows;
  Rational c1_power;  // C1^q, maximum of scaled_power over rows
  double c1 = 0.0;
  int c1_argmax = 0;  // radius attaining C1 (first one on ties)

  // True iff scaled_power never increases from one row to the next after
  // the row attaining C1.
  bool scaled_nonincreasing_after_max() const;
  // True iff rho is strictly decreasing over rows with n >= from.
  bool rho_strictly_decreasing_from(int from) const;
};

/// Densities of the piece-rich set over the given increasing radii.
/// Every radius up to the largest is enumerated so cumulative counts are
/// exact; exceeding options.word_budget raises ResourceError carrying the
/// largest feasible radius.
DensityReport density_report(int rank, std::span<const int> radii, const Rational& eps,
                             const EnumerationOptions& options = {});

/// Columns n,sphere,ball,hits,rho_num,rho_den,bound.
std::string to_csv(const DensityReport& report);

/// sum_{i=1..n} i z^i via its closed form.
Rational power_sum_linear(const Rational& z, int n);
/// sum_{i=1..n} i^2 z^i via its closed form.
Rational power_sum_quadratic(const Rational& z, int n);

}  // namespace fgdef
