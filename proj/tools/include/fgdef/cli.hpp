#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fgdef::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitResource = 2;

/// Runs one command line; `args` excludes the program name. Input the
/// command reads from "-" comes from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fgdef::cli
