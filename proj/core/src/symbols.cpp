#include "fgdef/symbols.hpp"

namespace fgdef {

Symbol Symbol::inverse() const {
  switch (kind) {
    case SymbolKind::kVariable: return inv(variable);
    case SymbolKind::kInverseVariable: return var(variable);
    case SymbolKind::kConstant: return constant_word(fgdef::invert(constant));
  }
  return *this;
}

SymbolWord inverse(const SymbolWord& w) {
  SymbolWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word evaluate(std::span<const Symbol> symbols, std::span<const Word> assignment) {
  WordBuilder b;
  for (const auto& s : symbols) {
    switch (s.kind) {
      case SymbolKind::kConstant: b.append(s.constant); break;
      case SymbolKind::kVariable: b.append(assignment[s.variable]); break;
      case SymbolKind::kInverseVariable: b.append_inverse(assignment[s.variable]); break;
    }
  }
  return std::move(b).build();
}

std::optional<Word> evaluate_graphically(std::span<const Symbol> symbols, std::span<const Word> assignment) {
  std::vector<Letter> raw;
  for (const auto& s : symbols) {
    switch (s.kind) {
      case SymbolKind::kConstant:
        raw.insert(raw.end(), s.constant.letters().begin(), s.constant.letters().end());
        break;
      case SymbolKind::kVariable: {
        auto ls = assignment[s.variable].letters();
        raw.insert(raw.end(), ls.begin(), ls.end());
        break;
      }
      case SymbolKind::kInverseVariable: {
        auto ls = assignment[s.variable].letters();
        for (auto it = ls.rbegin(); it != ls.rend(); ++it) raw.push_back(it->inverse());
        break;
      }
    }
  }
  if (!is_reduced(raw)) return std::nullopt;
  return Word::reduce(raw);
}

}  // namespace fgdef
