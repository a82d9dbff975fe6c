#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace k3br::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;  ///< bad input, or a reference mismatch
inline constexpr int kExitUncertified = 2; ///< bound exceeded or uncertified enumeration

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3br::cli
