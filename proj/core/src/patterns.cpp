#include "fgdef/patterns.hpp"

#include <algorithm>

#include "fgdef/errors.hpp"
#include "fgdef/pieces.hpp"

namespace fgdef {

bool PatternSystem::is_free(std::size_t coordinate) const {
  return std::find(free.begin(), free.end(), coordinate) != free.end();
}

const PatternEquation* PatternSystem::first_equation(std::size_t coordinate) const {
  for (const auto& eq : equations) {
    if (eq.coordinate == coordinate) return &eq;
  }
  return nullptr;
}

namespace {

std::string coord_name(std::size_t j) { return "p" + std::to_string(j + 1); }

std::optional<Letter> first_letter(const PatternSymbol& s) {
  if (s.kind == SymbolKind::kConstant && !s.constant.empty()) return s.constant.front();
  return std::nullopt;
}

std::optional<Letter> last_letter(const PatternSymbol& s) {
  if (s.kind == SymbolKind::kConstant && !s.constant.empty()) return s.constant.back();
  return std::nullopt;
}

}  // namespace

std::vector<std::string> validate_pattern(const PatternSystem& system) {
  std::vector<std::string> problems;
  if (system.coordinates == 0) problems.push_back("system has no coordinates");

  std::vector<bool> seen_free(system.coordinates, false);
  for (std::size_t j : system.free) {
    if (j >= system.coordinates) {
      problems.push_back("free coordinate " + std::to_string(j + 1) + " out of range");
    } else if (seen_free[j]) {
      problems.push_back("free coordinate " + coord_name(j) + " listed twice");
    } else {
      seen_free[j] = true;
    }
  }
  if (system.coordinates > 0 && std::all_of(seen_free.begin(), seen_free.end(), [](bool b) { return b; })) {
    problems.push_back("every coordinate is free: the set is the whole group, not a proper subset");
  }

  std::vector<std::size_t> occurrences(system.variables.size(), 0);
  for (std::size_t e = 0; e < system.equations.size(); ++e) {
    const auto& eq = system.equations[e];
    const std::string where = "equation " + std::to_string(e + 1);
    if (eq.coordinate >= system.coordinates) {
      problems.push_back(where + ": coordinate " + std::to_string(eq.coordinate + 1) + " out of range");
      continue;
    }
    if (system.is_free(eq.coordinate)) {
      problems.push_back(where + ": free coordinate " + coord_name(eq.coordinate) + " cannot carry equations");
    }
    for (std::size_t s = 0; s < eq.symbols.size(); ++s) {
      const auto& sym = eq.symbols[s];
      if (sym.is_variable()) {
        if (sym.variable >= system.variables.size()) {
          problems.push_back(where + ": unknown variable index " + std::to_string(sym.variable + 1));
          continue;
        }
        ++occurrences[sym.variable];
      } else if (sym.constant.empty()) {
        problems.push_back(where + ": empty constant");
      }
      if (s == 0) continue;
      const auto& prev = eq.symbols[s - 1];
      auto l = last_letter(prev);
      auto f = first_letter(sym);
      if (l && f && cancels(*l, *f)) {
        problems.push_back(where + ": adjacent constants cancel at symbol " + std::to_string(s + 1));
      }
      if (prev.is_variable() && sym.is_variable() && prev.variable == sym.variable && prev.kind != sym.kind) {
        problems.push_back(where + ": variable " + std::to_string(sym.variable + 1) +
                           " is followed by its inverse and always cancels");
      }
    }
  }

  for (std::size_t j = 0; j < system.coordinates; ++j) {
    if (system.is_free(j)) continue;
    const auto* first = system.first_equation(j);
    if (first == nullptr) {
      problems.push_back("coordinate " + coord_name(j) + " is neither free nor constrained by an equation");
    } else if (first->symbols.empty()) {
      problems.push_back("first equation of " + coord_name(j) + " is empty");
    }
  }

  for (std::size_t v = 0; v < system.variables.size(); ++v) {
    if (occurrences[v] < 2) {
      problems.push_back("variable " + system.variables[v] + " occurs " + std::to_string(occurrences[v]) +
                         " time(s); at least two are required");
    }
  }
  return problems;
}

std::size_t constant_length(const PatternEquation& equation) {
  std::size_t c = 0;
  for (const auto& s : equation.symbols) {
    if (s.kind == SymbolKind::kConstant) c += s.constant.size();
  }
  return c;
}

std::size_t symbol_length(const PatternEquation& equation) {
  std::size_t m = 0;
  for (const auto& s : equation.symbols) m += s.kind == SymbolKind::kConstant ? s.constant.size() : 1;
  return m;
}

Rational pattern_ratio_bound(const PatternSystem& system, std::size_t coordinate) {
  const auto* first = system.first_equation(coordinate);
  if (first == nullptr || first->symbols.empty()) {
    throw InputError("coordinate " + coord_name(coordinate) + " has no non-empty first equation");
  }
  return Rational(1, static_cast<long>(symbol_length(*first)));
}

namespace {

class Matcher {
 public:
  Matcher(const PatternSystem& system, std::span<const Word> tuple) : system_(system), tuple_(tuple) {
    for (const auto& eq : system.equations) order_.push_back(&eq);
    values_.resize(system.variables.size());
  }

  std::optional<MatchResult> run() {
    if (solve(0, 0, 0)) return std::move(result_);
    return std::nullopt;
  }

 private:
  std::span<const Letter> target(const PatternEquation& eq) const { return tuple_[eq.coordinate].letters(); }

  // Lower bound on the letters still needed by symbols [from, end).
  std::size_t min_remaining(const PatternEquation& eq, std::size_t from) const {
    std::size_t need = 0;
    for (std::size_t s = from; s < eq.symbols.size(); ++s) {
      const auto& sym = eq.symbols[s];
      if (sym.kind == SymbolKind::kConstant) {
        need += sym.constant.size();
      } else {
        need += values_[sym.variable] ? values_[sym.variable]->size() : 1;
      }
    }
    return need;
  }

  static bool spells(std::span<const Letter> t, std::size_t pos, const Word& w, bool inverted) {
    if (pos + w.size() > t.size()) return false;
    const auto ls = w.letters();
    const std::size_t n = ls.size();
    for (std::size_t i = 0; i < n; ++i) {
      Letter expect = inverted ? ls[n - 1 - i].inverse() : ls[i];
      if (t[pos + i] != expect) return false;
    }
    return true;
  }

  bool solve(std::size_t e, std::size_t s, std::size_t pos) {
    if (e == order_.size()) return accept();
    const auto& eq = *order_[e];
    const auto t = target(eq);
    if (s == eq.symbols.size()) return pos == t.size() && solve(e + 1, 0, 0);
    if (pos + min_remaining(eq, s) > t.size()) return false;

    const auto& sym = eq.symbols[s];
    if (sym.kind == SymbolKind::kConstant) {
      return spells(t, pos, sym.constant, false) && solve(e, s + 1, pos + sym.constant.size());
    }
    const bool inverted = sym.kind == SymbolKind::kInverseVariable;
    auto& slot = values_[sym.variable];
    if (slot) return spells(t, pos, *slot, inverted) && solve(e, s + 1, pos + slot->size());

    const std::size_t rest = min_remaining(eq, s + 1);
    for (std::size_t len = 1; pos + len + rest <= t.size(); ++len) {
      Word piece = Word::reduce(t.subspan(pos, len));
      slot = inverted ? invert(piece) : std::move(piece);
      if (solve(e, s + 1, pos + len)) return true;
    }
    slot.reset();
    return false;
  }

  bool accept() {
    MatchResult r;
    for (const auto& v : values_) r.assignment.push_back(v.value_or(Word()));
    for (std::size_t j = 0; j < system_.coordinates; ++j) {
      if (system_.is_free(j)) continue;
      const auto* first = system_.first_equation(j);
      std::vector<bool> seen(values_.size(), false);
      for (const auto& sym : first->symbols) {
        if (!sym.is_variable() || seen[sym.variable]) continue;
        seen[sym.variable] = true;
        const bool ok = is_piece(tuple_, r.assignment[sym.variable]);
        if (!ok) return false;
        r.piece_flags.push_back({j, sym.variable, ok});
      }
    }
    result_ = std::move(r);
    return true;
  }

  const PatternSystem& system_;
  std::span<const Word> tuple_;
  std::vector<const PatternEquation*> order_;
  std::vector<std::optional<Word>> values_;
  MatchResult result_;
};

}  // namespace

std::optional<MatchResult> match_pattern(const PatternSystem& system, std::span<const Word> tuple) {
  auto problems = validate_pattern(system);
  if (!problems.empty()) throw InputError("invalid pattern system: " + problems.front());
  if (tuple.size() != system.coordinates) {
    throw InputError("tuple has " + std::to_string(tuple.size()) + " components, system expects " +
                     std::to_string(system.coordinates));
  }
  return Matcher(system, tuple).run();
}

std::optional<std::vector<Word>> instantiate(const PatternSystem& system, std::span<const Word> assignment,
                                             std::span<const Word> free_values) {
  auto problems = validate_pattern(system);
  if (!problems.empty()) throw InputError("invalid pattern system: " + problems.front());
  if (assignment.size() != system.variables.size()) {
    throw InputError("assignment has " + std::to_string(assignment.size()) + " values for " +
                     std::to_string(system.variables.size()) + " variables");
  }
  std::vector<std::optional<Word>> spelled(system.coordinates);
  for (std::size_t j = 0; j < system.coordinates; ++j) {
    if (!system.is_free(j)) continue;
    if (j >= free_values.size()) throw InputError("no value for free coordinate " + coord_name(j));
    spelled[j] = free_values[j];
  }
  for (const auto& eq : system.equations) {
    auto w = evaluate_graphically(eq, assignment);
    if (!w) return std::nullopt;
    auto& slot = spelled[eq.coordinate];
    if (slot && *slot != *w) return std::nullopt;
    slot = std::move(w);
  }
  std::vector<Word> out;
  for (auto& w : spelled) out.push_back(w.value_or(Word()));
  return out;
}

bool member_of_multipattern(std::span<const PatternSystem> systems, std::span<const Word> tuple) {
  return std::any_of(systems.begin(), systems.end(),
                     [&](const PatternSystem& s) { return match_pattern(s, tuple).has_value(); });
}

NegligibilityAccumulator::NegligibilityAccumulator(Rational eps, std::size_t exception_cap)
    : cap_(exception_cap) {
  if (eps <= 0 || eps > 1) throw InputError("eps must lie in (0, 1], got " + to_string(eps));
  summary_.eps = std::move(eps);
}

void NegligibilityAccumulator::add(const Word& word) {
  const std::size_t piece = longest_piece_length(word.letters());
  const bool above = !word.empty() && Rational(static_cast<long>(piece), static_cast<long>(word.size())) >= summary_.eps;

  auto& rows = summary_.by_length;
  auto it = std::lower_bound(rows.begin(), rows.end(), word.size(),
                             [](const NegligibilityRow& r, std::size_t len) { return r.length < len; });
  if (it == rows.end() || it->length != word.size()) it = rows.insert(it, NegligibilityRow{word.size(), 0, 0});

  if (above) {
    ++it->at_or_above;
    ++summary_.at_or_above;
  } else {
    ++it->below;
    ++summary_.below;
    if (summary_.exceptions.size() < cap_) {
      summary_.exceptions.push_back(word);
    } else {
      summary_.exceptions_truncated = true;
    }
  }
}

NegligibilitySummary negligibility_report(std::span<const Word> words, const Rational& eps,
                                          std::size_t exception_cap) {
  NegligibilityAccumulator acc(eps, exception_cap);
  for (const Word& w : words) acc.add(w);
  return acc.summary();
}

Word witness_family(const Word& x, const Word& y, int i) {
  if (i < 1) throw InputError("witness family index must be >= 1");
  if (commute(x, y)) throw InputError("witness family needs non-commuting x and y, got " + to_string(x) + ", " + to_string(y));
  WordBuilder b;
  b.append(x);
  for (int t = 1; t <= i; ++t) {
    for (int r = 0; r < t; ++r) b.append(y);
    b.append(x);
  }
  return std::move(b).build();
}

}  // namespace fgdef
