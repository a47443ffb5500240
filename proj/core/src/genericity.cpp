#include "fgdef/genericity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "fgdef/errors.hpp"
#include "fgdef/pieces.hpp"
#include "fgdef/sphere_cache.hpp"

namespace fgdef {

void BallSpec::validate() const {
  if (rank < 2 || rank > Alphabet::kMaxRank) {
    throw InputError("rank must be in [2, 26], got " + std::to_string(rank));
  }
  if (radius < 0) throw InputError("radius must be non-negative, got " + std::to_string(radius));
}

BigInt sphere_count(const BallSpec& spec) {
  spec.validate();
  if (spec.radius == 0) return 1;
  const int k = spec.letters();
  return BigInt(k) * pow(BigInt(k - 1), static_cast<unsigned>(spec.radius - 1));
}

BigInt ball_size(const BallSpec& spec) {
  spec.validate();
  BigInt total = 1;
  for (int m = 1; m <= spec.radius; ++m) total += sphere_count({spec.rank, m});
  return total;
}

BigInt ball_size_without_identity(const BallSpec& spec) {
  spec.validate();
  const int k = spec.letters();
  // k/(k-2) is not an integer in general; the product is.
  return BigInt(k) * (pow(BigInt(k - 1), static_cast<unsigned>(spec.radius)) - 1) / (k - 2);
}

namespace {

void extend(const Alphabet& alphabet, std::vector<Letter>& buffer, std::size_t target,
            const LetterVisitor& visit) {
  if (buffer.size() == target) {
    visit(buffer);
    return;
  }
  for (int ord = 0; ord < alphabet.size(); ++ord) {
    Letter x = alphabet.letter(ord);
    if (!buffer.empty() && cancels(buffer.back(), x)) continue;
    buffer.push_back(x);
    extend(alphabet, buffer, target, visit);
    buffer.pop_back();
  }
}

void check_eps(const Rational& eps) {
  if (eps <= 0 || eps > 1) throw InputError("eps must lie in (0, 1], got " + to_string(eps));
}

void check_budget(const BallSpec& spec, const EnumerationOptions& options) {
  if (sphere_count(spec) > options.word_budget) {
    throw ResourceError("sphere of radius " + std::to_string(spec.radius) +
                        " exceeds the enumeration budget of " + std::to_string(options.word_budget) +
                        " words");
  }
}

// Splits the sphere into prefix blocks and counts words satisfying `pred`
// over them with `parallelism` workers. The per-block counts are summed in
// block order, so the result does not depend on scheduling.
template <typename Pred>
std::uint64_t parallel_count(const BallSpec& spec, unsigned parallelism, Pred pred) {
  if (parallelism <= 1 || spec.radius == 0) {
    std::uint64_t count = 0;
    for_each_in_sphere(spec, [&](std::span<const Letter> w) { count += pred(w) ? 1 : 0; });
    return count;
  }
  int depth = 1;
  while (depth < spec.radius && sphere_count({spec.rank, depth}) < 4 * parallelism) ++depth;
  const auto prefixes = sphere_prefixes(spec, depth);
  std::vector<std::uint64_t> counts(prefixes.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      std::uint64_t c = 0;
      for_each_in_sphere(spec, prefixes[i], [&](std::span<const Letter> w) { c += pred(w) ? 1 : 0; });
      counts[i] = c;
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned workers = std::min<unsigned>(parallelism, static_cast<unsigned>(prefixes.size()));
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace

void for_each_in_sphere(const BallSpec& spec, const LetterVisitor& visit) {
  for_each_in_sphere(spec, {}, visit);
}

void for_each_in_sphere(const BallSpec& spec, std::span<const Letter> prefix, const LetterVisitor& visit) {
  spec.validate();
  const Alphabet alphabet(spec.rank);
  if (prefix.size() > static_cast<std::size_t>(spec.radius)) {
    throw InputError("prefix longer than the sphere radius");
  }
  if (!is_reduced(prefix)) throw InputError("sphere prefix must be reduced");
  for (Letter x : prefix) {
    if (!alphabet.contains(x)) throw InputError("prefix letter outside the alphabet");
  }
  std::vector<Letter> buffer(prefix.begin(), prefix.end());
  buffer.reserve(static_cast<std::size_t>(spec.radius));
  extend(alphabet, buffer, static_cast<std::size_t>(spec.radius), visit);
}

std::vector<Word> enumerate_sphere(const BallSpec& spec) {
  std::vector<Word> out;
  for_each_in_sphere(spec, [&](std::span<const Letter> w) { out.push_back(Word::reduce(w)); });
  return out;
}

Word random_word(const BallSpec& spec, std::mt19937_64& rng) {
  spec.validate();
  const Alphabet alphabet(spec.rank);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(spec.radius));
  for (int i = 0; i < spec.radius; ++i) {
    // After the first letter, k-1 choices: skip the one that would cancel.
    const int choices = i == 0 ? alphabet.size() : alphabet.size() - 1;
    int ord = std::uniform_int_distribution<int>(0, choices - 1)(rng);
    if (i > 0 && ord >= letters.back().inverse().ordinal(spec.rank)) ++ord;
    letters.push_back(alphabet.letter(ord));
  }
  return Word::reduce(letters);
}

std::vector<std::vector<Letter>> sphere_prefixes(const BallSpec& spec, int length) {
  std::vector<std::vector<Letter>> out;
  for_each_in_sphere({spec.rank, length},
                     [&](std::span<const Letter> w) { out.emplace_back(w.begin(), w.end()); });
  return out;
}

std::size_t piece_threshold(int length, const Rational& eps) {
  return ceil(eps * length).convert_to<std::size_t>();
}

std::uint64_t count_piece_rich(const BallSpec& spec, const Rational& eps, const EnumerationOptions& options) {
  spec.validate();
  check_eps(eps);
  if (spec.radius == 0) return 0;  // the identity has no piece
  const std::size_t m = piece_threshold(spec.radius, eps);

  if (options.cache != nullptr) {
    auto words = options.cache->load(spec);
    if (!words) {
      check_budget(spec, options);
      words = enumerate_sphere(spec);
      options.cache->store(spec, *words);
    }
    std::uint64_t count = 0;
    for (const Word& w : *words) count += has_piece_of_length(w.letters(), m) ? 1 : 0;
    return count;
  }

  check_budget(spec, options);
  return parallel_count(spec, options.parallelism,
                        [m](std::span<const Letter> w) { return has_piece_of_length(w, m); });
}

bool DensityReport::scaled_nonincreasing_after_max() const {
  bool past_max = false;
  const Rational* prev = nullptr;
  for (const auto& row : rows) {
    if (row.n == c1_argmax) past_max = true;
    if (past_max && prev != nullptr && row.n != c1_argmax && row.scaled_power > *prev) return false;
    prev = &row.scaled_power;
  }
  return true;
}

bool DensityReport::rho_strictly_decreasing_from(int from) const {
  const Rational* prev = nullptr;
  for (const auto& row : rows) {
    if (row.n < from) continue;
    if (prev != nullptr && !(row.rho < *prev)) return false;
    prev = &row.rho;
  }
  return true;
}

DensityReport density_report(int rank, std::span<const int> radii, const Rational& eps,
                             const EnumerationOptions& options) {
  check_eps(eps);
  if (radii.empty()) throw InputError("density_report: no radii requested");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 0 || (i > 0 && radii[i] <= radii[i - 1])) {
      throw InputError("density_report: radii must be non-negative and strictly increasing");
    }
  }
  const int nmax = radii.back();
  BallSpec{rank, nmax}.validate();

  BigInt total = 0;
  int feasible = 0;
  for (int n = 1; n <= nmax; ++n) {
    total += sphere_count({rank, n});
    if (total > options.word_budget) {
      throw ResourceError("radius " + std::to_string(nmax) + " exceeds the enumeration budget of " +
                              std::to_string(options.word_budget) + " words; largest feasible radius is " +
                              std::to_string(feasible),
                          feasible);
    }
    feasible = n;
  }

  DensityReport report;
  report.rank = rank;
  report.eps = eps;
  const BigInt p = boost::multiprecision::numerator(eps);
  const BigInt q = boost::multiprecision::denominator(eps);
  report.root = q.convert_to<unsigned>();
  const int k = 2 * rank;

  std::uint64_t cumulative = 0;
  std::size_t next_radius = 0;
  for (int n = 0; n <= nmax; ++n) {
    const std::uint64_t hits = count_piece_rich({rank, n}, eps, options);
    cumulative += hits;
    if (radii[next_radius] != n) continue;
    ++next_radius;

    DensityRow row;
    row.n = n;
    row.sphere = sphere_count({rank, n});
    row.ball = ball_size({rank, n});
    row.hits = hits;
    row.cumulative_hits = cumulative;
    row.rho = Rational(BigInt(cumulative), row.ball);
    row.rho_sphere = Rational(BigInt(hits), row.sphere);
    if (n > 0) {
      const unsigned qn = report.root;
      const unsigned pn = (p * n).convert_to<unsigned>();
      row.scaled_power = pow(row.rho, qn) * Rational(pow(BigInt(k - 1), pn)) /
                         Rational(pow(BigInt(n), 2 * qn));
      row.scaled = row.rho.convert_to<double>() *
                   std::pow(static_cast<double>(k - 1), eps.convert_to<double>() * n) / (double(n) * n);
    }
    if (!report.rows.empty()) row.decreasing = row.rho < report.rows.back().rho;
    report.rows.push_back(std::move(row));
  }

  for (const auto& row : report.rows) {
    if (row.n > 0 && (report.c1_argmax == 0 || row.scaled_power > report.c1_power)) {
      report.c1_power = row.scaled_power;
      report.c1_argmax = row.n;
    }
  }
  report.c1 = std::pow(report.c1_power.convert_to<double>(), 1.0 / report.root);
  for (auto& row : report.rows) {
    if (row.n > 0) {
      row.bound = report.c1 * double(row.n) * row.n /
                  std::pow(static_cast<double>(k - 1), eps.convert_to<double>() * row.n);
    }
  }
  return report;
}

std::string to_csv(const DensityReport& report) {
  std::ostringstream os;
  os << "n,sphere,ball,hits,rho_num,rho_den,bound\n";
  for (const auto& row : report.rows) {
    os << row.n << ',' << row.sphere << ',' << row.ball << ',' << row.hits << ','
       << boost::multiprecision::numerator(row.rho) << ',' << boost::multiprecision::denominator(row.rho) << ','
       << to_decimal(row.bound) << '\n';
  }
  return os.str();
}

namespace {

void check_power_sum_args(const Rational& z, int n) {
  if (z == 1) throw SingularInputError("power sum closed form is singular at z = 1");
  if (n < 1) throw InputError("power sum needs n >= 1");
}

}  // namespace

Rational power_sum_linear(const Rational& z, int n) {
  check_power_sum_args(z, n);
  const auto un = static_cast<unsigned>(n);
  const Rational one_minus = 1 - z;
  return z * (1 - (n + 1) * pow(z, un) + n * pow(z, un + 1)) / (one_minus * one_minus);
}

Rational power_sum_quadratic(const Rational& z, int n) {
  check_power_sum_args(z, n);
  const auto un = static_cast<unsigned>(n);
  const BigInt bn = n;
  const Rational one_minus = 1 - z;
  const Rational numerator = 1 + z - Rational((bn + 1) * (bn + 1)) * pow(z, un) +
                             Rational(2 * bn * bn + 2 * bn - 1) * pow(z, un + 1) -
                             Rational(bn * bn) * pow(z, un + 2);
  return z * numerator / (one_minus * one_minus * one_minus);
}

}  // namespace fgdef
