#include "fgdef/cuteq.hpp"

#include <algorithm>
#include <sstream>

#include "fgdef/errors.hpp"

namespace fgdef {

std::vector<BoundarySpan> GeneralizedEquation::closed_sections() const {
  if (sections.empty()) return {BoundarySpan{1, items + 1}};
  return sections;
}

namespace {

void check_tiles(std::span<const BoundarySpan> spans, std::size_t items, const std::string& what) {
  if (spans.empty()) throw InputError(what + ": empty");
  std::size_t at = 1;
  for (const auto& s : spans) {
    if (s.left != at || s.right <= s.left) {
      throw InputError(what + ": intervals must be consecutive, disjoint and non-degenerate, starting at 1");
    }
    at = s.right;
  }
  if (at != items + 1) throw InputError(what + ": does not cover [1, " + std::to_string(items + 1) + "]");
}

bool inside(const BoundarySpan& inner, const BoundarySpan& outer) {
  return outer.left <= inner.left && inner.right <= outer.right;
}

}  // namespace

void GeneralizedEquation::validate() const {
  if (items == 0) throw InputError("generalized equation needs at least one item");
  const auto secs = closed_sections();
  check_tiles(secs, items, "closed sections");
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const Base& b = bases[i];
    const std::string who = "base '" + b.name + "'";
    if (b.span.left < 1 || b.span.left >= b.span.right || b.span.right > items + 1) {
      throw InputError(who + ": endpoints must satisfy 1 <= left < right <= rho+1");
    }
    if (b.orientation != 1 && b.orientation != -1) throw InputError(who + ": orientation must be +1 or -1");
    if (b.dual.has_value() == b.constant.has_value()) {
      throw InputError(who + ": needs exactly one of a dual base or a constant label");
    }
    if (b.dual) {
      if (*b.dual >= bases.size() || *b.dual == i) throw InputError(who + ": bad dual reference");
      const Base& d = bases[*b.dual];
      if (!d.dual || *d.dual != i) throw InputError(who + ": duality is not symmetric");
    } else if (b.constant->empty()) {
      throw InputError(who + ": constant label must be non-empty");
    }
    if (std::none_of(secs.begin(), secs.end(), [&](const BoundarySpan& s) { return inside(b.span, s); })) {
      throw InputError(who + ": must lie within a single closed section");
    }
  }
}

Word segment(std::span<const Word> items, const BoundarySpan& span) {
  std::vector<Letter> raw;
  for (std::size_t i = span.left; i < span.right; ++i) {
    auto ls = items[i - 1].letters();
    raw.insert(raw.end(), ls.begin(), ls.end());
  }
  return Word::reduce(raw);
}

namespace {

bool reads_reduced(std::span<const Word> items, const BoundarySpan& span) {
  for (std::size_t i = span.left + 1; i < span.right; ++i) {
    if (cancels(items[i - 2].back(), items[i - 1].front())) return false;
  }
  return true;
}

Word oriented(const Word& w, int orientation) { return orientation < 0 ? invert(w) : w; }

}  // namespace

bool is_solution(const GeneralizedEquation& ge, std::span<const Word> items) {
  if (items.size() != ge.items) throw InputError("item assignment has the wrong size");
  for (const Word& h : items) {
    if (h.empty()) return false;
  }
  for (const auto& s : ge.closed_sections()) {
    if (!reads_reduced(items, s)) return false;
  }
  for (const Base& b : ge.bases) {
    const Word lhs = oriented(segment(items, b.span), b.orientation);
    if (b.constant) {
      if (lhs != *b.constant) return false;
    } else {
      const Base& d = ge.bases[*b.dual];
      if (lhs != oriented(segment(items, d.span), d.orientation)) return false;
    }
  }
  return true;
}

void CutEquation::validate() const {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto& iv = intervals[i];
    const std::string who = "interval " + std::to_string(i + 1);
    if (iv.fx.empty()) throw InputError(who + ": f_X is empty");
    if (iv.fm.empty()) throw InputError(who + ": f_M is empty");
    for (const auto& [p, inv] : iv.fx) {
      if (p >= params.size()) throw InputError(who + ": unknown parameter index");
    }
    for (const auto& s : iv.fm) {
      if (s.is_variable() && s.variable >= vars.size()) throw InputError(who + ": unknown variable index");
      if (!s.is_variable() && s.constant.empty()) throw InputError(who + ": empty constant");
    }
  }
}

std::string CutEquation::render(const SymbolWord& word) const {
  std::string out;
  for (const auto& s : word) {
    if (!out.empty()) out += ' ';
    switch (s.kind) {
      case SymbolKind::kVariable: out += vars[s.variable]; break;
      case SymbolKind::kInverseVariable: out += vars[s.variable] + "^-1"; break;
      case SymbolKind::kConstant: out += to_string(s.constant); break;
    }
  }
  return out.empty() ? "1" : out;
}

std::string CutEquation::render(const CutInterval& interval) const {
  std::string lhs;
  for (const auto& [p, inv] : interval.fx) {
    if (!lhs.empty()) lhs += ' ';
    lhs += params[p] + (inv ? "^-1" : "");
  }
  return lhs + " = " + render(interval.fm);
}

namespace {

struct Tiler {
  const GeneralizedEquation& ge;
  const CutEquationBuild& build;
  BoundarySpan sigma;
  std::size_t param;
  std::vector<CutInterval>& out;
  SymbolWord current;

  void run(std::size_t at) {
    if (at == sigma.right) {
      out.push_back(CutInterval{{{param, false}}, current, sigma});
      return;
    }
    current.push_back(Symbol::var(build.item_vars[at - 1]));
    run(at + 1);
    current.pop_back();
    for (std::size_t bi = 0; bi < ge.bases.size(); ++bi) {
      const Base& b = ge.bases[bi];
      if (b.span.left != at || b.span.right > sigma.right) continue;
      if (b.constant) {
        current.push_back(Symbol::constant_word(oriented(*b.constant, b.orientation)));
      } else {
        current.push_back(Symbol::oriented(*build.base_vars[bi], b.orientation));
      }
      run(b.span.right);
      current.pop_back();
    }
  }
};

}  // namespace

CutEquationBuild build_cut_equation(const GeneralizedEquation& ge, std::span<const BoundarySpan> partition) {
  ge.validate();
  check_tiles(partition, ge.items, "interval partition X");
  const auto secs = ge.closed_sections();
  auto is_section_boundary = [&](std::size_t b) {
    return b == 1 || std::any_of(secs.begin(), secs.end(), [&](const BoundarySpan& s) { return s.right == b; });
  };
  for (const auto& sigma : partition) {
    if (!is_section_boundary(sigma.left) || !is_section_boundary(sigma.right)) {
      throw InputError("interval partition X must consist of unions of closed sections");
    }
  }

  CutEquationBuild build;
  auto& eq = build.equation;
  for (std::size_t i = 1; i <= ge.items; ++i) {
    build.item_vars.push_back(eq.vars.size());
    eq.vars.push_back("h" + std::to_string(i));
  }
  build.base_vars.resize(ge.bases.size());
  for (std::size_t bi = 0; bi < ge.bases.size(); ++bi) {
    const Base& b = ge.bases[bi];
    if (!b.dual) continue;
    if (bi < *b.dual) {
      build.base_vars[bi] = eq.vars.size();
      eq.vars.push_back(b.name);
    } else {
      build.base_vars[bi] = build.base_vars[*b.dual];
    }
  }
  for (std::size_t p = 0; p < partition.size(); ++p) {
    const auto& sigma = partition[p];
    eq.params.push_back("x" + std::to_string(p + 1));
    build.parameter_spans.push_back(sigma);
    Tiler{ge, build, sigma, p, eq.intervals, {}}.run(sigma.left);
  }
  return build;
}

CutEquationBuild build_cut_equation(const GeneralizedEquation& ge) {
  const auto secs = ge.closed_sections();
  return build_cut_equation(ge, secs);
}

InducedSolution induced_solution(const CutEquationBuild& build, const GeneralizedEquation& ge,
                                 std::span<const Word> items) {
  if (items.size() != ge.items) throw InputError("item assignment has the wrong size");
  InducedSolution sol;
  for (const auto& sigma : build.parameter_spans) sol.beta.push_back(segment(items, sigma));
  sol.alpha.resize(build.equation.vars.size());
  for (std::size_t i = 0; i < ge.items; ++i) sol.alpha[build.item_vars[i]] = items[i];
  for (std::size_t bi = 0; bi < ge.bases.size(); ++bi) {
    const Base& b = ge.bases[bi];
    if (b.dual && bi < *b.dual) {
      sol.alpha[*build.base_vars[bi]] = oriented(segment(items, b.span), b.orientation);
    }
  }
  return sol;
}

namespace {

Word evaluate_params(const ParamWord& fx, std::span<const Word> beta) {
  WordBuilder b;
  for (const auto& [p, inv] : fx) {
    if (inv) {
      b.append_inverse(beta[p]);
    } else {
      b.append(beta[p]);
    }
  }
  return std::move(b).build();
}

}  // namespace

SolutionCheck check_solution(const CutEquation& eq, std::span<const Word> beta, std::span<const Word> alpha,
                             SolutionMode mode) {
  eq.validate();
  if (beta.size() != eq.params.size()) throw InputError("beta must assign every parameter");
  if (alpha.size() != eq.vars.size()) throw InputError("alpha must assign every variable");
  if (mode == SolutionMode::kGraphical) {
    for (std::size_t v = 0; v < alpha.size(); ++v) {
      if (alpha[v].empty()) throw InputError("variable '" + eq.vars[v] + "' is assigned the empty word");
    }
  }
  SolutionCheck check;
  check.mode = mode;
  check.ok = true;
  for (const auto& iv : eq.intervals) {
    const Word target = evaluate_params(iv.fx, beta);
    bool ok = false;
    if (mode == SolutionMode::kGraphical) {
      auto spelled = evaluate_graphically(iv.fm, alpha);
      ok = spelled && *spelled == target;
    } else {
      ok = evaluate(iv.fm, alpha) == target;
    }
    check.interval_ok.push_back(ok);
    check.ok = check.ok && ok;
  }
  return check;
}

std::vector<std::size_t> occurrence_counts(const CutEquation& eq) {
  std::vector<std::size_t> counts(eq.vars.size(), 0);
  for (const auto& iv : eq.intervals) {
    for (const auto& s : iv.fm) {
      if (s.is_variable()) ++counts[s.variable];
    }
  }
  return counts;
}

namespace {

std::string parenthesized_inverse(const CutEquation& eq, const SymbolWord& w) {
  if (w.empty()) return "";
  if (w.size() == 1) return eq.render(inverse(w));
  return "(" + eq.render(w) + ")^-1";
}

std::string render_params(const CutEquation& eq, const ParamWord& fx, bool inverted) {
  if (inverted && fx.size() == 1) return eq.params[fx[0].first] + (fx[0].second ? "" : "^-1");
  std::string out;
  for (const auto& [p, inv] : fx) {
    if (!out.empty()) out += ' ';
    out += eq.params[p] + (inv ? "^-1" : "");
  }
  return inverted ? "(" + out + ")^-1" : out;
}

// A y B = t gives y = A^-1 t B^-1; A y^-1 B = t gives y = B t^-1 A.
std::string express(const CutEquation& eq, const CutInterval& iv, std::size_t symbol) {
  const SymbolWord prefix(iv.fm.begin(), iv.fm.begin() + static_cast<std::ptrdiff_t>(symbol));
  const SymbolWord suffix(iv.fm.begin() + static_cast<std::ptrdiff_t>(symbol) + 1, iv.fm.end());
  const auto& s = iv.fm[symbol];
  std::vector<std::string> parts;
  if (s.kind == SymbolKind::kVariable) {
    parts = {parenthesized_inverse(eq, prefix), render_params(eq, iv.fx, false), parenthesized_inverse(eq, suffix)};
  } else {
    parts = {suffix.empty() ? "" : eq.render(suffix), render_params(eq, iv.fx, true),
             prefix.empty() ? "" : eq.render(prefix)};
  }
  std::string rhs;
  for (const auto& part : parts) {
    if (part.empty()) continue;
    if (!rhs.empty()) rhs += ' ';
    rhs += part;
  }
  return eq.vars[s.variable] + " = " + rhs;
}

}  // namespace

EliminationResult eliminate_single_occurrence(const CutEquation& eq) {
  eq.validate();
  EliminationResult result;
  std::vector<bool> alive(eq.intervals.size(), true);
  std::vector<std::size_t> counts = occurrence_counts(eq);

  for (;;) {
    std::optional<std::size_t> pick_interval;
    std::optional<std::size_t> pick_var;
    for (std::size_t i = 0; i < eq.intervals.size() && !pick_interval; ++i) {
      if (!alive[i]) continue;
      for (const auto& s : eq.intervals[i].fm) {
        if (s.is_variable() && counts[s.variable] == 1 && (!pick_var || s.variable < *pick_var)) {
          pick_var = s.variable;
        }
      }
      if (pick_var) pick_interval = i;
    }
    if (!pick_interval) break;

    const auto& iv = eq.intervals[*pick_interval];
    std::size_t symbol = 0;
    while (!(iv.fm[symbol].is_variable() && iv.fm[symbol].variable == *pick_var)) ++symbol;
    result.trace.push_back({*pick_interval, *pick_var, symbol, express(eq, iv, symbol)});
    alive[*pick_interval] = false;
    for (const auto& s : iv.fm) {
      if (s.is_variable()) --counts[s.variable];
    }
  }

  result.reduced.params = eq.params;
  result.reduced.vars = eq.vars;
  std::vector<bool> param_seen(eq.params.size(), false);
  std::vector<bool> param_kept(eq.params.size(), false);
  for (std::size_t i = 0; i < eq.intervals.size(); ++i) {
    for (const auto& [p, inv] : eq.intervals[i].fx) {
      param_seen[p] = true;
      if (alive[i]) param_kept[p] = true;
    }
    if (alive[i]) {
      result.kept.push_back(i);
      result.reduced.intervals.push_back(eq.intervals[i]);
    }
  }
  for (std::size_t p = 0; p < eq.params.size(); ++p) {
    if (param_seen[p] && !param_kept[p]) result.unconstrained_params.push_back(p);
  }
  return result;
}

std::vector<Word> extend_group_solution(const CutEquation& original, const EliminationResult& result,
                                        std::span<const Word> beta, std::vector<Word> alpha) {
  if (alpha.size() != original.vars.size()) throw InputError("alpha must cover every variable");
  if (beta.size() != original.params.size()) throw InputError("beta must cover every parameter");
  for (auto it = result.trace.rbegin(); it != result.trace.rend(); ++it) {
    const auto& iv = original.intervals[it->interval];
    const std::span<const Symbol> fm = iv.fm;
    const Word prefix = evaluate(fm.first(it->symbol), alpha);
    const Word suffix = evaluate(fm.subspan(it->symbol + 1), alpha);
    const Word target = evaluate_params(iv.fx, beta);
    // prefix * y^e * suffix = target
    Word value = std::move(WordBuilder().append_inverse(prefix).append(target).append_inverse(suffix)).build();
    if (fm[it->symbol].kind == SymbolKind::kInverseVariable) value = invert(value);
    alpha[it->variable] = std::move(value);
  }
  return alpha;
}

}  // namespace fgdef
