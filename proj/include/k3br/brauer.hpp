#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "k3br/enumerate.hpp"
#include "k3br/factored_ideal.hpp"
#include "k3br/field.hpp"

namespace k3br {

/// Invariant factors d_1 | d_2 | ..., ascending; empty for the trivial group.
using Invariants = std::vector<Integer>;

Integer group_order(const Invariants& inv);

/// Sort key for catalogs: group order, then the invariant sequence.
bool group_less(const Invariants& a, const Invariants& b);

/// "Z/3 x Z/3 x Z/2": primary parts, primes descending, then powers
/// descending; "0" for the trivial group.
std::string group_notation(const Invariants& inv);

/// Accepts any product of cyclic factors "Z/k x Z/m ..." or "0".
Invariants parse_group_notation(std::string_view text);

struct CatalogEntry {
  FactoredIdeal ideal;  ///< I_B
  Integer norm;
  Invariants invariants;
  std::vector<FactoredIdeal> witnesses;  ///< kept ideals contained in I_B
};

struct BrauerCatalog {
  ImQuadField field;
  Integer n;
  bool certified = true;
  std::vector<CatalogEntry> entries;        ///< canonical ideal order
  std::vector<Invariants> distinct_groups;  ///< group_less order
};

/// Every integral divisor of every kept ideal, with its group O_E/I_B.
/// Throws BoundExceeded on an uncertified report unless `force` is set.
BrauerCatalog brauer_superset(const EnumerationReport& report, bool force = false);

/// Groups deduplicated and sorted with group_less.
std::vector<Invariants> distinct_sorted(std::vector<Invariants> groups);

/// Odd discriminant classification by the behaviour of 2 and 3.
struct OddDiscCase {
  char label = 'a';
  Splitting two = Splitting::Split;
  Splitting three = Splitting::Split;
  std::vector<FactoredIdeal> kept;   ///< canonical order
  std::vector<Invariants> groups;    ///< group_less order
};

/// Requires 2 unramified and μ(E) = {±1}; ValidationError otherwise.
OddDiscCase odd_disc_case(const ImQuadField& E);

struct HilbertEntry {
  FactoredIdeal ideal;
  Invariants invariants;
};

/// Integral I with N(I) <= norm_bound, one per conjugate pair, such that
/// conjugation is trivial on (O_E/J)^× / μ(E) for J = lcm(I, conj(I)).
std::vector<HilbertEntry> hilbert_brauer_set(const ImQuadField& E, std::int64_t norm_bound,
                                             std::int64_t residue_bound = kDefaultResidueBound);

}  // namespace k3br
