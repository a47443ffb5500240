#include "fgdef/pattern_json.hpp"

#include <json.hpp>

#include "fgdef/errors.hpp"

namespace fgdef {

using nlohmann::json;

namespace {

std::size_t variable_ref(const json& ref, const std::vector<std::string>& names) {
  if (ref.is_number_integer()) {
    const auto idx = ref.get<long>();
    if (idx < 1) throw InputError("variable references are 1-based");
    return static_cast<std::size_t>(idx - 1);
  }
  if (ref.is_string()) {
    const auto name = ref.get<std::string>();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return i;
    }
    throw InputError("unknown variable name '" + name + "'");
  }
  throw InputError("variable reference must be an index or a name");
}

std::vector<PatternSymbol> parse_symbols(const json& list, const std::vector<std::string>& names,
                                         const Alphabet& alphabet) {
  if (!list.is_array()) throw InputError("equation must be an array of symbols");
  std::vector<PatternSymbol> out;
  for (const auto& sym : list) {
    if (!sym.is_array() || sym.size() != 2 || !sym[0].is_string()) {
      throw InputError("symbol must be a [kind, value] pair: " + sym.dump());
    }
    const auto kind = sym[0].get<std::string>();
    if (kind == "y") {
      out.push_back(Symbol::var(variable_ref(sym[1], names)));
    } else if (kind == "yinv") {
      out.push_back(Symbol::inv(variable_ref(sym[1], names)));
    } else if (kind == "const") {
      if (!sym[1].is_string()) throw InputError("constant must be a word string");
      out.push_back(Symbol::constant_word(parse_reduced_word(sym[1].get<std::string>(), alphabet)));
    } else {
      throw InputError("unknown symbol kind '" + kind + "'");
    }
  }
  return out;
}

json symbols_to_json(const std::vector<PatternSymbol>& symbols) {
  json list = json::array();
  for (const auto& s : symbols) {
    switch (s.kind) {
      case SymbolKind::kVariable: list.push_back({"y", s.variable + 1}); break;
      case SymbolKind::kInverseVariable: list.push_back({"yinv", s.variable + 1}); break;
      case SymbolKind::kConstant: list.push_back({"const", to_string(s.constant)}); break;
    }
  }
  return list;
}

}  // namespace

PatternSystem parse_pattern_system(std::string_view json_text, const Alphabet& alphabet) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("pattern system: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("pattern system must be a JSON object");

  PatternSystem system;
  try {
    if (doc.contains("variables")) system.variables = doc.at("variables").get<std::vector<std::string>>();
    system.coordinates = doc.value("coordinates", std::size_t{1});
    if (doc.contains("free")) {
      for (const auto& j : doc.at("free")) {
        const auto idx = j.get<long>();
        if (idx < 1) throw InputError("coordinates are 1-based");
        system.free.push_back(static_cast<std::size_t>(idx - 1));
      }
    }
    for (const auto& eq : doc.at("equations")) {
      PatternEquation parsed;
      if (eq.is_object()) {
        const auto coord = eq.at("coordinate").get<long>();
        if (coord < 1) throw InputError("coordinates are 1-based");
        parsed.coordinate = static_cast<std::size_t>(coord - 1);
        parsed.symbols = parse_symbols(eq.at("symbols"), system.variables, alphabet);
      } else {
        parsed.symbols = parse_symbols(eq, system.variables, alphabet);
      }
      system.equations.push_back(std::move(parsed));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("pattern system: ") + e.what());
  }
  return system;
}

std::string to_json(const PatternSystem& system, int indent) {
  json doc;
  doc["variables"] = system.variables;
  doc["coordinates"] = system.coordinates;
  json free = json::array();
  for (auto j : system.free) free.push_back(j + 1);
  doc["free"] = free;
  json eqs = json::array();
  for (const auto& eq : system.equations) {
    if (eq.coordinate == 0) {
      eqs.push_back(symbols_to_json(eq.symbols));
    } else {
      eqs.push_back({{"coordinate", eq.coordinate + 1}, {"symbols", symbols_to_json(eq.symbols)}});
    }
  }
  doc["equations"] = eqs;
  return doc.dump(indent);
}

}  // namespace fgdef
