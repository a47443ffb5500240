#include "fgdef/definable.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "fgdef/errors.hpp"
#include "fgdef/genericity.hpp"

namespace fgdef {

namespace {

bool inverse_pair(const Symbol& x, const Symbol& y) {
  return x.is_variable() && y.is_variable() && x.variable == y.variable && x.kind != y.kind;
}

std::size_t variable_index(std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
  names.push_back(name);
  return names.size() - 1;
}

}  // namespace

EquationExpr parse_equation(std::string_view text, const Alphabet& alphabet) {
  EquationExpr eq;
  std::vector<Letter> raw;  // pending constant letters
  bool saw_one = false;
  bool saw_other = false;
  auto flush = [&] {
    if (raw.empty()) return;
    if (!eq.symbols.empty() && !eq.symbols.back().is_variable()) {
      auto prev = eq.symbols.back().constant.letters();
      raw.insert(raw.begin(), prev.begin(), prev.end());
      eq.symbols.pop_back();
    }
    if (!is_reduced(raw)) throw InputError("equation is not reduced as written: '" + std::string(text) + "'");
    eq.symbols.push_back(Symbol::constant_word(Word::reduce(raw)));
    raw.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '1') {
      saw_one = true;
      continue;
    }
    saw_other = true;
    if (c != '$') {
      raw.push_back(alphabet.parse_letter(c));
      continue;
    }
    flush();
    if (i + 1 >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i + 1]))) {
      throw InputError("'$' must be followed by a variable name");
    }
    const bool inverted = std::isupper(static_cast<unsigned char>(text[++i]));
    std::string name(1, static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
    while (i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) name += text[++i];
    const std::size_t v = variable_index(eq.variables, name);
    Symbol sym = inverted ? Symbol::inv(v) : Symbol::var(v);
    if (!eq.symbols.empty() && inverse_pair(eq.symbols.back(), sym)) {
      throw InputError("equation is not reduced as written: '" + std::string(text) + "'");
    }
    eq.symbols.push_back(std::move(sym));
  }
  flush();
  if (saw_one && saw_other) throw InputError("'1' cannot be mixed with other symbols");
  if (!saw_one && !saw_other) throw InputError("empty equation text");
  return eq;
}

std::string to_string(const EquationExpr& eq) {
  if (eq.symbols.empty()) return "1";
  std::string out;
  for (const auto& s : eq.symbols) {
    if (!out.empty()) out += ' ';
    if (s.kind == SymbolKind::kConstant) {
      out += to_string(s.constant);
      continue;
    }
    std::string name = eq.variables[s.variable];
    if (s.kind == SymbolKind::kInverseVariable) name[0] = static_cast<char>(std::toupper(name[0]));
    out += '$' + name;
  }
  return out;
}

SymbolWord formally_reduce(std::span<const Symbol> symbols) {
  SymbolWord out;
  for (const auto& s : symbols) {
    if (s.kind == SymbolKind::kConstant) {
      if (!out.empty() && out.back().kind == SymbolKind::kConstant) {
        Word merged = out.back().constant * s.constant;
        out.pop_back();
        if (!merged.empty()) out.push_back(Symbol::constant_word(std::move(merged)));
      } else if (!s.constant.empty()) {
        out.push_back(s);
      }
      continue;
    }
    if (!out.empty() && inverse_pair(out.back(), s)) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

Word evaluate(const EquationExpr& eq, std::span<const Word> assignment) {
  if (assignment.size() != eq.variables.size()) {
    throw InputError("assignment has " + std::to_string(assignment.size()) + " values for " +
                     std::to_string(eq.variables.size()) + " variables");
  }
  return evaluate(std::span<const Symbol>(eq.symbols), assignment);
}

namespace {

void require_f2(const Alphabet& alphabet, std::initializer_list<const Word*> words) {
  if (alphabet.rank() != 2) {
    throw InputError("this test is specific to the free group of rank 2, got rank " +
                     std::to_string(alphabet.rank()));
  }
  for (const Word* w : words) {
    for (Letter x : w->letters()) {
      if (!alphabet.contains(x)) throw InputError("letter outside {a, b, A, B} in " + to_string(*w));
    }
  }
}

const Letter kA = Letter::generator(0);
const Letter kB = Letter::generator(1);

// Whitehead automorphism fixing x and sending the other generator y to
// y x (kind 1), x^-1 y (kind 2) or x^-1 y x (kind 3).
Word apply_whitehead(const Word& w, Letter x, int kind) {
  const int fixed = x.generator_index();
  const Word xw = Word::letter(x);
  const Word xi = Word::letter(x.inverse());
  WordBuilder b;
  for (Letter l : w.letters()) {
    if (l.generator_index() == fixed) {
      b.push(l);
      continue;
    }
    const Word y = Word::letter(Letter::generator(l.generator_index()));
    Word image = kind == 1 ? y * xw : kind == 2 ? xi * y : xi * y * xw;
    if (l.is_inverse()) {
      b.append_inverse(image);
    } else {
      b.append(image);
    }
  }
  return std::move(b).build();
}

}  // namespace

bool is_basis_pair_f2(const Word& g, const Word& h, const Alphabet& alphabet) {
  require_f2(alphabet, {&g, &h});
  const Word c = commutator(g, h);
  const Word a = Word::letter(kA);
  const Word b = Word::letter(kB);
  return is_conjugate(c, commutator(a, b)) || is_conjugate(c, commutator(b, a));
}

Word whitehead_minimize(const Word& w, const Alphabet& alphabet) {
  require_f2(alphabet, {&w});
  Word current = cyclic_reduce(w).core;
  for (bool improved = true; improved && current.size() > 1;) {
    improved = false;
    for (int ord = 0; ord < alphabet.size() && !improved; ++ord) {
      for (int kind = 1; kind <= 3 && !improved; ++kind) {
        Word next = cyclic_reduce(apply_whitehead(current, alphabet.letter(ord), kind)).core;
        if (next.size() < current.size()) {
          current = std::move(next);
          improved = true;
        }
      }
    }
  }
  return current;
}

bool is_primitive_f2(const Word& w, const Alphabet& alphabet) {
  return whitehead_minimize(w, alphabet).size() == 1;
}

namespace {

SymbolWord remap(const EquationExpr& eq, std::vector<std::string>& names) {
  SymbolWord out = eq.symbols;
  for (auto& s : out) {
    if (s.is_variable()) s.variable = variable_index(names, eq.variables[s.variable]);
  }
  return out;
}

void append(SymbolWord& dst, const SymbolWord& src, int times = 1) {
  for (int t = 0; t < times; ++t) dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

EquationExpr combine_pair(const EquationExpr& s1, const EquationExpr& s2, const Alphabet& alphabet) {
  if (alphabet.rank() < 2) throw InputError("combining equations needs two non-commuting constants (rank >= 2)");
  EquationExpr out;
  const SymbolWord x = remap(s1, out.variables);
  const SymbolWord y = remap(s2, out.variables);
  const Symbol a = Symbol::constant_word(Word::letter(kA));
  const Symbol b = Symbol::constant_word(Word::letter(kB));

  // (x^2 a)^2 a^-2
  SymbolWord left;
  SymbolWord x2a = x;
  append(x2a, x);
  x2a.push_back(a);
  append(left, x2a, 2);
  left.push_back(a.inverse());
  left.push_back(a.inverse());

  // (y b)^2 b^-2, inverted, squared
  SymbolWord yb = y;
  yb.push_back(b);
  SymbolWord inner;
  append(inner, yb, 2);
  inner.push_back(b.inverse());
  inner.push_back(b.inverse());
  append(left, inverse(inner), 2);

  out.symbols = formally_reduce(left);
  return out;
}

EquationExpr combine_system_to_single(std::span<const EquationExpr> equations, const Alphabet& alphabet) {
  if (equations.empty()) throw InputError("cannot combine an empty system");
  if (alphabet.rank() < 2) throw InputError("combining equations needs two non-commuting constants (rank >= 2)");
  EquationExpr acc = equations.front();
  for (std::size_t i = 1; i < equations.size(); ++i) acc = combine_pair(acc, equations[i], alphabet);
  return acc;
}

bool check_trivial_only(const EquationExpr& eq, int max_length, const Alphabet& alphabet, std::uint64_t budget) {
  if (max_length < 1) throw InputError("length bound must be >= 1");
  const BigInt ball = ball_size({alphabet.rank(), max_length});
  BigInt total = 1;
  for (std::size_t v = 0; v < eq.variables.size(); ++v) {
    total *= ball;
    if (total > budget) {
      throw ResourceError(std::to_string(eq.variables.size()) + " variables of length <= " +
                          std::to_string(max_length) + " exceed the search budget of " + std::to_string(budget) +
                          " assignments");
    }
  }

  std::vector<Word> words{Word()};
  for (int n = 1; n <= max_length; ++n) {
    auto sphere = enumerate_sphere({alphabet.rank(), n});
    words.insert(words.end(), sphere.begin(), sphere.end());
  }

  const std::size_t vars = eq.variables.size();
  std::vector<std::size_t> idx(vars, 0);
  std::vector<Word> assignment(vars);
  while (true) {
    // Odometer step; the all-identity start is skipped.
    std::size_t v = 0;
    while (v < vars && ++idx[v] == words.size()) idx[v++] = 0;
    if (v == vars) return true;
    for (std::size_t i = 0; i < vars; ++i) assignment[i] = words[idx[i]];
    if (evaluate(std::span<const Symbol>(eq.symbols), assignment).empty()) return false;
  }
}

WordPair apply_nielsen(const WordPair& pair, NielsenMove move) {
  const auto& [g, h] = pair;
  switch (move) {
    case NielsenMove::kSwap: return {h, g};
    case NielsenMove::kInvertFirst: return {invert(g), h};
    case NielsenMove::kInvertSecond: return {g, invert(h)};
    case NielsenMove::kMultiplyFirst: return {g * h, h};
    case NielsenMove::kMultiplySecond: return {g, h * g};
  }
  return pair;
}

std::vector<WordPair> nielsen_closure(int max_moves) {
  std::set<WordPair> seen{{Word::letter(kA), Word::letter(kB)}};
  std::vector<WordPair> frontier(seen.begin(), seen.end());
  for (int step = 0; step < max_moves; ++step) {
    std::vector<WordPair> next;
    for (const auto& p : frontier) {
      for (NielsenMove m : kNielsenMoves) {
        auto q = apply_nielsen(p, m);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace fgdef
