#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3br/arith.hpp"

namespace k3br {

/// One reference case compiled in from data/reference_tables.txt.
struct ReferenceCase {
  std::string key;
  std::string title;
  std::int64_t d = 0;
  std::optional<Integer> n;  ///< empty: n is the K3 class number of E
  std::vector<std::string> kept;
  std::vector<std::string> groups;
};

const std::vector<ReferenceCase>& reference_cases();
const ReferenceCase& reference_case(std::string_view key);

/// Parse the table format; exposed for tests.
std::vector<ReferenceCase> parse_reference_tables(std::string_view text);

}  // namespace k3br
