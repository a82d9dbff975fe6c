#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "k3br/factored_ideal.hpp"
#include "k3br/field.hpp"

namespace k3br {

/// Z-module [a·1, b + c·ω] in Hermite form: a, c > 0 and 0 <= b < a.
struct ZBasisIdeal {
  Rational a = 1;
  Rational b = 0;
  Rational c = 1;

  Rational index() const { return a * c; }
  bool is_integral() const { return a.get_den() == 1 && b.get_den() == 1 && c.get_den() == 1; }
  friend bool operator==(const ZBasisIdeal&, const ZBasisIdeal&) = default;
};

/// Hermite form of the Z-span of rank-2 generators (rational coordinates).
ZBasisIdeal hnf_span(std::span<const FieldElement> gens);

ZBasisIdeal to_zbasis(const ImQuadField& E, const FactoredIdeal& I);
bool contains(const ZBasisIdeal& I, const FieldElement& e);

/// Inverse of to_zbasis. Throws ValidationError when the Z-module is not
/// an O_E-ideal.
FactoredIdeal from_zbasis(const ImQuadField& E, const ZBasisIdeal& Z);

/// The basis vectors a and b + c·ω as field elements.
std::pair<FieldElement, FieldElement> basis_elements(const ImQuadField& E, const ZBasisIdeal& I);

FactoredIdeal factor_rational(const ImQuadField& E, const Rational& q);
FactoredIdeal factor_element(const ImQuadField& E, const FieldElement& e);
inline FactoredIdeal unit_ideal() { return {}; }

/// |(O_E/I)^×| for integral I.
Integer euler_phi_E(const FactoredIdeal& I);

/// I ∩ Z for integral ambiguous I, as its positive generator.
Integer intersect_Z(const FactoredIdeal& I);

/// [O_E^× : O_E^I] = |μ(E)| / #{ζ ∈ μ(E) : ζ ≡ 1 mod I}.
Integer unit_residue_index(const ImQuadField& E, const FactoredIdeal& I);

/// A generator when I is principal; exhaustive over the norm ellipse.
std::optional<FieldElement> is_principal(const ImQuadField& E, const FactoredIdeal& I);

/// Invariant factors d_1 | d_2 | ... of the additive group O_E/I.
std::vector<Integer> abelian_invariants(const FactoredIdeal& I);

/// h_I(E) = h·φ_E(I) / [O_E^× : O_E^I].
Integer ray_class_number(const ImQuadField& E, const FactoredIdeal& I);

inline constexpr std::int64_t kDefaultResidueBound = 1'000'000;

/// Whether conjugation acts trivially on (O_E/J)^× / μ(E), by exhaustive
/// residue enumeration. Throws BoundExceeded when N(J) > bound.
bool residue_units_galois_trivial(const ImQuadField& E, const FactoredIdeal& J,
                                  std::int64_t bound = kDefaultResidueBound);

/// Every integral ideal of norm <= bound, canonical order.
std::vector<FactoredIdeal> integral_ideals_up_to(const ImQuadField& E, std::int64_t bound);

/// Every integral divisor of an integral ideal, canonical order.
std::vector<FactoredIdeal> integral_divisors(const FactoredIdeal& I);

void require_integral(const FactoredIdeal& I, const char* what);

}  // namespace k3br
