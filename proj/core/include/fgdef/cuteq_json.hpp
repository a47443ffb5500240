#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgdef/cuteq.hpp"

namespace fgdef {

/// {"params":["p"],"vars":["h1","mu"],
///  "intervals":[{"fx":"p","fm":[["var","h1"],["varinv","mu"],["const","ab"]]}]}
///
/// "fx" is a parameter name, or a list of ["param",name] / ["paraminv",name].
CutEquation parse_cut_equation(std::string_view json_text, const Alphabet& alphabet);
std::string to_json(const CutEquation& eq, int indent = -1);

struct GeneralizedEquationInput {
  GeneralizedEquation equation;
  std::optional<std::vector<BoundarySpan>> partition;
};

/// {"items":3,
///  "bases":[{"name":"mu","left":1,"right":2,"orientation":1,"dual":"nu"},
///           {"name":"c","left":3,"right":4,"const":"ab"}],
///  "sections":[[1,4]], "partition":[[1,4]]}
///
/// "sections", "partition" and "orientation" are optional.
GeneralizedEquationInput parse_generalized_equation(std::string_view json_text, const Alphabet& alphabet);

struct NamedAssignment {
  std::vector<Word> beta;
  std::vector<Word> alpha;
};

/// {"beta":{"p":"ab"},"alpha":{"mu":"a","nu":"b"}}; every parameter and
/// variable of `eq` must be assigned.
NamedAssignment parse_assignment(std::string_view json_text, const CutEquation& eq, const Alphabet& alphabet);

}  // namespace fgdef
