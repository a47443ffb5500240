#include "fgdef/cuteq_json.hpp"

#include <json.hpp>

#include "fgdef/errors.hpp"

namespace fgdef {

using nlohmann::json;

namespace {

json parse_document(std::string_view text, const char* what) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw InputError(std::string(what) + " must be a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& name, const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw InputError(std::string("unknown ") + what + " '" + name + "'");
}

}  // namespace

CutEquation parse_cut_equation(std::string_view json_text, const Alphabet& alphabet) {
  const json doc = parse_document(json_text, "cut equation");
  CutEquation eq;
  try {
    eq.params = doc.at("params").get<std::vector<std::string>>();
    eq.vars = doc.at("vars").get<std::vector<std::string>>();
    for (const auto& iv : doc.at("intervals")) {
      CutInterval interval;
      const auto& fx = iv.at("fx");
      if (fx.is_string()) {
        interval.fx.emplace_back(index_of(eq.params, fx.get<std::string>(), "parameter"), false);
      } else {
        for (const auto& sym : fx) {
          const auto kind = sym.at(0).get<std::string>();
          if (kind != "param" && kind != "paraminv") throw InputError("unknown fx symbol kind '" + kind + "'");
          interval.fx.emplace_back(index_of(eq.params, sym.at(1).get<std::string>(), "parameter"),
                                   kind == "paraminv");
        }
      }
      for (const auto& sym : iv.at("fm")) {
        const auto kind = sym.at(0).get<std::string>();
        const auto value = sym.at(1).get<std::string>();
        if (kind == "var") {
          interval.fm.push_back(Symbol::var(index_of(eq.vars, value, "variable")));
        } else if (kind == "varinv") {
          interval.fm.push_back(Symbol::inv(index_of(eq.vars, value, "variable")));
        } else if (kind == "const") {
          interval.fm.push_back(Symbol::constant_word(parse_reduced_word(value, alphabet)));
        } else {
          throw InputError("unknown fm symbol kind '" + kind + "'");
        }
      }
      if (iv.contains("span")) {
        interval.span = BoundarySpan{iv["span"].at(0).get<std::size_t>(), iv["span"].at(1).get<std::size_t>()};
      }
      eq.intervals.push_back(std::move(interval));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("cut equation: ") + e.what());
  }
  eq.validate();
  return eq;
}

std::string to_json(const CutEquation& eq, int indent) {
  json doc;
  doc["params"] = eq.params;
  doc["vars"] = eq.vars;
  json intervals = json::array();
  for (const auto& iv : eq.intervals) {
    json item;
    if (iv.fx.size() == 1 && !iv.fx[0].second) {
      item["fx"] = eq.params[iv.fx[0].first];
    } else {
      json fx = json::array();
      for (const auto& [p, inv] : iv.fx) fx.push_back({inv ? "paraminv" : "param", eq.params[p]});
      item["fx"] = fx;
    }
    json fm = json::array();
    for (const auto& s : iv.fm) {
      switch (s.kind) {
        case SymbolKind::kVariable: fm.push_back({"var", eq.vars[s.variable]}); break;
        case SymbolKind::kInverseVariable: fm.push_back({"varinv", eq.vars[s.variable]}); break;
        case SymbolKind::kConstant: fm.push_back({"const", to_string(s.constant)}); break;
      }
    }
    item["fm"] = fm;
    if (iv.span) item["span"] = {iv.span->left, iv.span->right};
    intervals.push_back(item);
  }
  doc["intervals"] = intervals;
  return doc.dump(indent);
}

namespace {

std::vector<BoundarySpan> parse_spans(const json& list) {
  std::vector<BoundarySpan> out;
  for (const auto& s : list) out.push_back({s.at(0).get<std::size_t>(), s.at(1).get<std::size_t>()});
  return out;
}

}  // namespace

GeneralizedEquationInput parse_generalized_equation(std::string_view json_text, const Alphabet& alphabet) {
  const json doc = parse_document(json_text, "generalized equation");
  GeneralizedEquationInput input;
  auto& ge = input.equation;
  try {
    ge.items = doc.at("items").get<std::size_t>();
    std::vector<std::string> names;
    for (const auto& b : doc.value("bases", json::array())) names.push_back(b.at("name").get<std::string>());
    for (const auto& b : doc.value("bases", json::array())) {
      Base base;
      base.name = b.at("name").get<std::string>();
      base.span = {b.at("left").get<std::size_t>(), b.at("right").get<std::size_t>()};
      base.orientation = b.value("orientation", 1);
      if (b.contains("dual")) base.dual = index_of(names, b["dual"].get<std::string>(), "base");
      if (b.contains("const")) base.constant = parse_reduced_word(b["const"].get<std::string>(), alphabet);
      ge.bases.push_back(std::move(base));
    }
    if (doc.contains("sections")) ge.sections = parse_spans(doc["sections"]);
    if (doc.contains("partition")) input.partition = parse_spans(doc["partition"]);
  } catch (const json::exception& e) {
    throw InputError(std::string("generalized equation: ") + e.what());
  }
  ge.validate();
  return input;
}

NamedAssignment parse_assignment(std::string_view json_text, const CutEquation& eq, const Alphabet& alphabet) {
  const json doc = parse_document(json_text, "assignment");
  NamedAssignment out;
  auto read = [&](const char* key, const std::vector<std::string>& names, std::vector<Word>& values) {
    const json section = doc.value(key, json::object());
    for (const auto& name : names) {
      if (!section.contains(name)) throw InputError(std::string("unassigned symbol '") + name + "' in " + key);
      values.push_back(parse_word(section[name].get<std::string>(), alphabet));
    }
  };
  try {
    read("beta", eq.params, out.beta);
    read("alpha", eq.vars, out.alpha);
  } catch (const json::exception& e) {
    throw InputError(std::string("assignment: ") + e.what());
  }
  return out;
}

}  // namespace fgdef
