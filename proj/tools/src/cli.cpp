#include "fgdef/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "fgdef/cuteq.hpp"
#include "fgdef/cuteq_json.hpp"
#include "fgdef/definable.hpp"
#include "fgdef/errors.hpp"
#include "fgdef/genericity.hpp"
#include "fgdef/pattern_json.hpp"
#include "fgdef/patterns.hpp"
#include "fgdef/pieces.hpp"
#include "fgdef/sphere_cache.hpp"

namespace fgdef::cli {

namespace {

using nlohmann::json;

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

std::vector<std::string> read_lines(const std::string& path, std::istream& in) {
  std::istringstream text(read_text(path, in));
  std::vector<std::string> lines;
  for (std::string line; std::getline(text, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line.erase(line.find_last_not_of(" \t\r") + 1);
    lines.push_back(line.substr(first));
  }
  return lines;
}

std::vector<Word> parse_tuple(const std::string& line, const Alphabet& alphabet) {
  std::istringstream is(line);
  std::vector<Word> tuple;
  for (std::string token; is >> token;) tuple.push_back(parse_reduced_word(token, alphabet));
  return tuple;
}

std::string join(const std::vector<Word>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += to_string(w);
  }
  return out;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

// density ------------------------------------------------------------------

struct DensityArgs {
  int rank = 2;
  std::string eps;
  int nmin = 1;
  int nmax = 0;
  std::string out;
  std::string cache_dir;
  unsigned parallelism = 1;
  std::uint64_t budget = 100'000'000;
  bool json = false;
};

std::string density_json(const DensityReport& report) {
  json doc;
  doc["rank"] = report.rank;
  doc["eps"] = to_string(report.eps);
  doc["c1"] = report.c1;
  doc["c1_argmax"] = report.c1_argmax;
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"sphere", r.sphere.str()},
                    {"ball", r.ball.str()},
                    {"hits", r.hits},
                    {"cumulative_hits", r.cumulative_hits},
                    {"rho", to_string(r.rho)},
                    {"rho_sphere", to_string(r.rho_sphere)},
                    {"scaled", r.scaled},
                    {"bound", r.bound},
                    {"decreasing", r.decreasing}});
  }
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

int run_density(const DensityArgs& a, std::ostream& out) {
  if (a.nmax < a.nmin) throw InputError("--nmax must be at least --nmin");
  std::vector<int> radii;
  for (int n = a.nmin; n <= a.nmax; ++n) radii.push_back(n);

  std::string cache_dir = a.cache_dir;
  if (const char* env = std::getenv("FGDEF_CACHE"); env != nullptr && *env != '\0') cache_dir = env;
  std::optional<SphereCache> cache;
  if (!cache_dir.empty()) cache.emplace(cache_dir);

  EnumerationOptions options;
  options.parallelism = a.parallelism;
  options.word_budget = a.budget;
  options.cache = cache ? &*cache : nullptr;
  const auto report = density_report(a.rank, radii, parse_rational(a.eps), options);
  write_output(a.out, a.json ? density_json(report) : to_csv(report), out);
  return kExitOk;
}

// pieces -------------------------------------------------------------------

int run_pieces(const std::string& input, int rank, std::istream& in, std::ostream& out) {
  const Alphabet alphabet(rank);
  out << "word,length,piece,ratio\n";
  for (const auto& line : read_lines(input, in)) {
    const Word w = parse_reduced_word(line, alphabet);
    const auto report = longest_piece(w);
    out << to_string(w) << ',' << w.size() << ',' << report.length << ',' << to_string(report.ratio) << '\n';
  }
  return kExitOk;
}

// pattern ------------------------------------------------------------------

PatternSystem load_system(const std::string& path, const Alphabet& alphabet, std::istream& in) {
  return parse_pattern_system(read_text(path, in), alphabet);
}

int run_pattern_match(const std::vector<std::string>& systems, const std::vector<std::string>& words, int rank,
                      std::istream& in, std::ostream& out) {
  const Alphabet alphabet(rank);
  std::vector<Word> tuple;
  for (const auto& w : words) tuple.push_back(parse_reduced_word(w, alphabet));
  for (const auto& path : systems) {
    const auto system = load_system(path, alphabet, in);
    if (system.coordinates != tuple.size()) continue;
    if (auto m = match_pattern(system, tuple)) {
      out << "match " << path << '\n';
      for (std::size_t v = 0; v < system.variables.size(); ++v) {
        out << system.variables[v] << " = " << to_string(m->assignment[v]) << '\n';
      }
      return kExitOk;
    }
  }
  out << "no match\n";
  return kExitOk;
}

struct ReportArgs {
  std::string system;
  std::string input = "-";
  std::string eps;
  int rank = 26;
  bool exceptions = false;
};

int run_pattern_report(const ReportArgs& a, std::istream& in, std::ostream& out) {
  const Alphabet alphabet(a.rank);
  std::optional<PatternSystem> system;
  if (!a.system.empty()) system = load_system(a.system, alphabet, in);

  Rational eps;
  if (!a.eps.empty()) {
    eps = parse_rational(a.eps);
  } else if (system) {
    std::size_t j = 0;
    while (system->is_free(j)) ++j;
    eps = pattern_ratio_bound(*system, j);
  } else {
    throw InputError("--eps is required without --system");
  }

  NegligibilityAccumulator acc(eps);
  std::uint64_t unmatched = 0;
  for (const auto& line : read_lines(a.input, in)) {
    auto tuple = parse_tuple(line, alphabet);
    if (!system) {
      for (const auto& w : tuple) acc.add(w);
      continue;
    }
    if (tuple.size() != system->coordinates || !match_pattern(*system, tuple)) {
      ++unmatched;
      continue;
    }
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      if (!system->is_free(j)) acc.add(tuple[j]);
    }
  }

  const auto& s = acc.summary();
  if (a.exceptions) {
    for (const auto& w : s.exceptions) out << to_string(w) << '\n';
    return kExitOk;
  }
  out << "length,at_or_above,below\n";
  for (const auto& row : s.by_length) out << row.length << ',' << row.at_or_above << ',' << row.below << '\n';
  out << "total," << s.at_or_above << ',' << s.below << '\n';
  if (system) out << "unmatched," << unmatched << ",\n";
  return kExitOk;
}

struct SampleArgs {
  std::string system;
  std::size_t count = 10;
  int max_length = 4;
  std::uint64_t seed = 1;
  int rank = 2;
};

int run_pattern_sample(const SampleArgs& a, std::istream& in, std::ostream& out) {
  if (a.max_length < 1) throw InputError("--max-length must be >= 1");
  const Alphabet alphabet(a.rank);
  const auto system = load_system(a.system, alphabet, in);
  std::mt19937_64 rng(a.seed);
  std::uniform_int_distribution<int> length(1, a.max_length);
  std::size_t produced = 0;
  for (std::size_t attempt = 0; produced < a.count && attempt < 1000 * a.count; ++attempt) {
    std::vector<Word> assignment;
    for (std::size_t v = 0; v < system.variables.size(); ++v) {
      assignment.push_back(random_word({a.rank, length(rng)}, rng));
    }
    std::vector<Word> free_values(system.coordinates);
    for (std::size_t j : system.free) free_values[j] = random_word({a.rank, length(rng)}, rng);
    auto tuple = instantiate(system, assignment, free_values);
    if (!tuple || !match_pattern(system, *tuple)) continue;
    out << join(*tuple) << '\n';
    ++produced;
  }
  return kExitOk;
}

// cuteq --------------------------------------------------------------------

int run_cuteq_build(const std::string& path, int rank, std::istream& in, std::ostream& out) {
  const auto input = parse_generalized_equation(read_text(path, in), Alphabet(rank));
  const auto built = input.partition ? build_cut_equation(input.equation, *input.partition)
                                     : build_cut_equation(input.equation);
  out << to_json(built.equation, 2) << '\n';
  return kExitOk;
}

int run_cuteq_check(const std::string& eq_path, const std::string& solution_path, const std::string& mode, int rank,
                    std::istream& in, std::ostream& out) {
  const Alphabet alphabet(rank);
  const auto eq = parse_cut_equation(read_text(eq_path, in), alphabet);
  const auto values = parse_assignment(read_text(solution_path, in), eq, alphabet);
  const auto check = check_solution(eq, values.beta, values.alpha,
                                    mode == "group" ? SolutionMode::kGroup : SolutionMode::kGraphical);
  for (std::size_t i = 0; i < check.interval_ok.size(); ++i) {
    out << "interval " << i + 1 << ": " << eq.render(eq.intervals[i]) << ": "
        << (check.interval_ok[i] ? "ok" : "fails") << '\n';
  }
  out << mode << ' ' << (check.ok ? "solution" : "not a solution") << '\n';
  return kExitOk;
}

int run_cuteq_eliminate(const std::string& path, bool trace, int rank, std::istream& in, std::ostream& out) {
  const auto eq = parse_cut_equation(read_text(path, in), Alphabet(rank));
  const auto result = eliminate_single_occurrence(eq);
  if (trace) {
    for (const auto& step : result.trace) {
      out << "remove interval " << step.interval + 1 << " (" << eq.vars[step.variable] << "): " << step.identity
          << '\n';
    }
    for (std::size_t p : result.unconstrained_params) out << "unconstrained " << eq.params[p] << '\n';
  }
  out << to_json(result.reduced, 2) << '\n';
  return kExitOk;
}

// definable ----------------------------------------------------------------

int run_malcev(const std::string& path, std::optional<int> check, int rank, std::uint64_t budget, std::istream& in,
               std::ostream& out) {
  const Alphabet alphabet(rank);
  std::vector<EquationExpr> system;
  for (const auto& line : read_lines(path, in)) system.push_back(parse_equation(line, alphabet));
  const auto combined = combine_system_to_single(system, alphabet);
  out << to_string(combined) << '\n';
  if (check) {
    out << "trivial-only " << (check_trivial_only(combined, *check, alphabet, budget) ? "true" : "false") << '\n';
  }
  return kExitOk;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free-group definability and genericity toolkit", "fgdef"};
  app.require_subcommand(1);

  DensityArgs dens;
  auto* density = app.add_subcommand("density", "Exact density of piece-rich words in spheres and balls");
  density->add_option("--rank", dens.rank, "Free group rank")->capture_default_str();
  density->add_option("--eps", dens.eps, "Piece threshold as p/q")->required();
  density->add_option("--nmin", dens.nmin, "Smallest radius")->capture_default_str();
  density->add_option("--nmax", dens.nmax, "Largest radius")->required();
  density->add_option("--out", dens.out, "Output path (default stdout)");
  density->add_option("--cache-dir", dens.cache_dir, "Sphere cache directory (FGDEF_CACHE overrides)");
  density->add_option("--parallelism", dens.parallelism, "Worker threads")->capture_default_str();
  density->add_option("--budget", dens.budget, "Maximum number of enumerated words")->capture_default_str();
  density->add_flag("--json", dens.json, "Emit JSON instead of CSV");

  std::string pieces_input = "-";
  int pieces_rank = 26;
  auto* pieces = app.add_subcommand("pieces", "Longest piece of each word, one word per line");
  pieces->add_option("--input", pieces_input, "Word list ('-' for stdin)")->capture_default_str();
  pieces->add_option("--rank", pieces_rank, "Alphabet rank")->capture_default_str();

  auto* pattern = app.add_subcommand("pattern", "Pattern systems");
  pattern->require_subcommand(1);
  std::vector<std::string> match_systems;
  std::vector<std::string> match_words;
  int match_rank = 26;
  auto* match = pattern->add_subcommand("match", "Match a tuple against one or more systems");
  match->add_option("--system", match_systems, "Pattern system JSON (repeatable)")->required();
  match->add_option("--rank", match_rank, "Alphabet rank")->capture_default_str();
  match->add_option("words", match_words, "Tuple components")->required();

  ReportArgs report_args;
  auto* report = pattern->add_subcommand("report", "Negligibility summary of a word list");
  report->add_option("--system", report_args.system, "Only count tuples matched by this system");
  report->add_option("--input", report_args.input, "Tuples, one per line ('-' for stdin)")->capture_default_str();
  report->add_option("--eps", report_args.eps, "Ratio threshold p/q (default: the system's 1/m)");
  report->add_option("--rank", report_args.rank, "Alphabet rank")->capture_default_str();
  report->add_flag("--exceptions", report_args.exceptions, "List words below the threshold instead");

  SampleArgs sample_args;
  auto* sample = pattern->add_subcommand("sample", "Random tuples matched by a system");
  sample->add_option("--system", sample_args.system, "Pattern system JSON")->required();
  sample->add_option("--count", sample_args.count, "Number of tuples")->capture_default_str();
  sample->add_option("--max-length", sample_args.max_length, "Longest variable value")->capture_default_str();
  sample->add_option("--seed", sample_args.seed, "Random seed")->capture_default_str();
  sample->add_option("--rank", sample_args.rank, "Free group rank")->capture_default_str();

  auto* cuteq = app.add_subcommand("cuteq", "Cut equations");
  cuteq->require_subcommand(1);
  int cuteq_rank = 26;
  cuteq->add_option("--rank", cuteq_rank, "Alphabet rank")->capture_default_str();
  std::string ge_path;
  auto* build = cuteq->add_subcommand("build", "Cut equation of a generalized equation");
  build->add_option("--ge", ge_path, "Generalized equation JSON")->required();
  std::string eq_path;
  std::string solution_path;
  std::string mode = "graphical";
  auto* check = cuteq->add_subcommand("check", "Check a solution of a cut equation");
  check->add_option("--eq", eq_path, "Cut equation JSON")->required();
  check->add_option("--solution", solution_path, "Assignment JSON")->required();
  check->add_option("--mode", mode, "graphical or group")
      ->check(CLI::IsMember({"graphical", "group"}))
      ->capture_default_str();
  bool trace = false;
  auto* eliminate = cuteq->add_subcommand("eliminate", "Remove intervals with a single-occurrence variable");
  eliminate->add_option("--eq", eq_path, "Cut equation JSON")->required();
  eliminate->add_flag("--trace", trace, "Print each removal and its expressing identity");

  std::string basis_g;
  std::string basis_h;
  auto* basis = app.add_subcommand("basis", "Is (g, h) a basis of F(a, b)?");
  basis->add_option("first", basis_g, "First element")->required();
  basis->add_option("second", basis_h, "Second element")->required();

  std::string primitive_w;
  auto* primitive = app.add_subcommand("primitive", "Is w a primitive element of F(a, b)?");
  primitive->add_option("word", primitive_w, "Element to test")->required();

  std::string malcev_path;
  std::optional<int> malcev_check;
  int malcev_rank = 2;
  std::uint64_t malcev_budget = 100'000'000;
  auto* malcev = app.add_subcommand("malcev", "Fold a system of equations into one");
  malcev->add_option("--combine", malcev_path, "One equation per line, variables written $x")->required();
  malcev->add_option("--check", malcev_check, "Exhaustively verify only the trivial solution up to this length");
  malcev->add_option("--rank", malcev_rank, "Free group rank")->capture_default_str();
  malcev->add_option("--budget", malcev_budget, "Maximum number of assignments searched")->capture_default_str();

  std::string wx;
  std::string wy;
  int wi = 1;
  bool wreport = false;
  int wrank = 26;
  auto* witness = app.add_subcommand("witness", "x y x y^2 x ... x y^i x");
  witness->add_option("--x", wx, "First word, must not commute with y")->required();
  witness->add_option("--y", wy, "Second word")->required();
  witness->add_option("--i", wi, "Family index, at least 1")->required();
  witness->add_option("--rank", wrank, "Alphabet rank")->capture_default_str();
  witness->add_flag("--report", wreport, "Also print length, longest piece and ratio");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (density->parsed()) return run_density(dens, out);
    if (pieces->parsed()) return run_pieces(pieces_input, pieces_rank, in, out);
    if (match->parsed()) return run_pattern_match(match_systems, match_words, match_rank, in, out);
    if (report->parsed()) return run_pattern_report(report_args, in, out);
    if (sample->parsed()) return run_pattern_sample(sample_args, in, out);
    if (build->parsed()) return run_cuteq_build(ge_path, cuteq_rank, in, out);
    if (check->parsed()) return run_cuteq_check(eq_path, solution_path, mode, cuteq_rank, in, out);
    if (eliminate->parsed()) return run_cuteq_eliminate(eq_path, trace, cuteq_rank, in, out);
    if (basis->parsed()) {
      const Alphabet f2(2);
      out << boolean(is_basis_pair_f2(parse_reduced_word(basis_g, f2), parse_reduced_word(basis_h, f2))) << '\n';
      return kExitOk;
    }
    if (primitive->parsed()) {
      out << boolean(is_primitive_f2(parse_reduced_word(primitive_w, Alphabet(2)))) << '\n';
      return kExitOk;
    }
    if (malcev->parsed()) return run_malcev(malcev_path, malcev_check, malcev_rank, malcev_budget, in, out);
    if (witness->parsed()) {
      const Alphabet alphabet(wrank);
      const Word w = witness_family(parse_reduced_word(wx, alphabet), parse_reduced_word(wy, alphabet), wi);
      out << to_string(w) << '\n';
      if (wreport) {
        const auto r = longest_piece(w);
        out << "length " << w.size() << "\npiece " << r.length << "\nratio " << to_string(r.ratio) << '\n';
      }
      return kExitOk;
    }
  } catch (const ResourceError& e) {
    err << "fgdef: " << e.what() << '\n';
    return kExitResource;
  } catch (const InputError& e) {
    err << "fgdef: " << e.what() << '\n';
    return kExitInput;
  }
  err << app.help();
  return kExitInput;
}

}  // namespace fgdef::cli
