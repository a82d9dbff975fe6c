#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3br/field.hpp"
#include "k3br/k3group.hpp"

namespace k3br {

/// One ambiguous block above a rational prime: (pp̄)^a, q^k or r^m.
struct PrimeBlock {
  std::int64_t p = 0;
  int exponent = 0;  ///< a, k or m
};

/// Contribution of a block to numerator_A relative to the empty block,
/// unit and H¹ slack aside:
///   split p^{a-1}(p-1), inert q^{k-1}(q+1), ramified 2·r^{⌊m/2⌋}.
Rational block_ratio(const ImQuadField& E, const PrimeBlock& block);

/// The ambiguous ideal of a block.
FactoredIdeal block_ideal(const ImQuadField& E, const PrimeBlock& block);

struct EnumerationOptions {
  std::map<std::int64_t, int> prime_caps;  ///< exponent ceiling overrides per rational prime
  std::optional<int> two_exp_cap;          ///< ceiling for ramified 2; default 2·(⌊log₂ n⌋ + 8)
};

struct KeptIdeal {
  FactoredIdeal ideal;
  K3OrderEstimate estimate;
};

struct EnumerationReport {
  ImQuadField field;
  Integer n;
  std::vector<KeptIdeal> kept;                ///< canonical order
  std::map<std::int64_t, int> prime_caps;     ///< exponent ceilings actually used
  Integer global_slack;
  bool cap_saturated = false;

  bool certified() const { return !cap_saturated; }
};

int default_two_exp_cap(const Integer& n);

/// All ambiguous integral I with g_k3_divides(I, n).
EnumerationReport enumerate_kept(const ImQuadField& E, const Integer& n, const EnumerationOptions& options = {});

}  // namespace k3br
