#pragma once

#include <string>
#include <string_view>

#include "fgdef/patterns.hpp"

namespace fgdef {

/// Reads the pattern-system JSON format:
///
///   {"variables": ["y"], "coordinates": 1, "free": [],
///    "equations": [[["y",1],["const","ab"],["yinv",1]], ...]}
///
/// Variables and coordinates are numbered from 1. A bare symbol list
/// constrains coordinate 1; {"coordinate": j, "symbols": [...]} targets p_j.
PatternSystem parse_pattern_system(std::string_view json_text, const Alphabet& alphabet);

std::string to_json(const PatternSystem& system, int indent = -1);

}  // namespace fgdef
