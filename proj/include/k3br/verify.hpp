#pragma once

#include <string>
#include <vector>

namespace k3br {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  ///< diff or measured value
};

/// Recomputes the worked examples (Q(i), Q(sqrt(-3)), the six odd
/// discriminant cases, order spot values, Hilbert-class-field checks) and
/// compares them with the compiled-in reference tables.
std::vector<CheckResult> verify_reference();

}  // namespace k3br
