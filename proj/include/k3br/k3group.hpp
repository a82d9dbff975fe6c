#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "k3br/factored_ideal.hpp"
#include "k3br/field.hpp"
#include "k3br/ideal.hpp"

namespace k3br {

// Order of the K3 class group modulo an ambiguous ideal I of an imaginary
// quadratic E. The general CM formula is
//
//            h_E · φ_E(I) · [O_F^× : N(O_E^I)] · [E:F]
//   |G| = -----------------------------------------------------------
//          h_F · φ_F(J) · [O_E^× : O_E^I] · e(E/F, J) · |H¹(E^{I,1})|
//
// with J = I ∩ O_F. Over F = Q the constants below apply.
namespace over_q {
inline constexpr long kClassNumberF = 1;       // h_F
inline constexpr long kDegree = 2;             // [E:F]
inline constexpr long kNormUnitIndex = 2;      // [O_F^× : N(O_E^I)], norms are positive
inline constexpr long kArchimedeanRamification = 2;  // the real place ramifies
}  // namespace over_q

/// e(E/Q, J): product of ramification indices over places not dividing J.
Integer e_ramification(const ImQuadField& E, const Integer& J);

/// [O_F^× : N(O_E^I)], always 2 for imaginary quadratic E.
Integer norm_unit_index(const ImQuadField& E, const FactoredIdeal& I);

struct H1Bound {
  bool exact = true;              ///< |H¹(E^{I,1})| is known to be `value`
  Integer value = 1;              ///< exact value, or an upper bound (power of 2)
  Integer invariant_unit_index = 1;  ///< [(O_E/I₂)^{×,G} : (Z/J₂)^×] when computed
};

/// H¹ bound: trivial when I is odd or 2 is unramified; otherwise
/// 2 · [(O_E/I₂)^{×,G} : (Z/J₂)^×].
///
/// With I₂ = p^m and x + yω a residue, conj fixes it iff y·√D ∈ p^m, i.e.
/// 2·v₂(y) + v₂(D) >= m. Counting in the HNF [2^⌈m/2⌉, 2^⌊m/2⌋ω] gives
/// index 2^(⌊m/2⌋ - k) with k = max(0, ⌈(m - v₂(D))/2⌉).
H1Bound h1_bound(const ImQuadField& E, const FactoredIdeal& I);

struct K3OrderEstimate {
  FactoredIdeal ideal;  ///< the ambiguous integral ideal evaluated
  Integer numerator_A;  ///< order times |H¹|
  std::optional<Integer> h1_exact;
  Integer h1_upper = 1;
  std::vector<Integer> possible_orders;  ///< ascending

  // factors of numerator_A, kept for reporting
  Integer J, phi_E, phi_J, unit_index, e_factor, h1_invariant_unit_index = 1;

  bool exact() const { return h1_exact.has_value(); }
};

/// Order estimate for |G_{K3,I}(E)|. Non-ambiguous I is replaced by
/// lcm(I, conj(I)) first.
K3OrderEstimate g_k3_order(const ImQuadField& E, const FactoredIdeal& I);

/// Same, with the H¹ data supplied by the caller (lets enumeration reuse it).
K3OrderEstimate g_k3_order_with_h1(const ImQuadField& E, const FactoredIdeal& ambiguous_I, const H1Bound& h1);

/// Some possible order divides n; equivalently numerator_A | n · h1_upper.
bool g_k3_divides(const K3OrderEstimate& est, const Integer& n);
bool g_k3_divides(const ImQuadField& E, const FactoredIdeal& I, const Integer& n);

/// |G_{K3}(E)| = order at I = (1); cross-checked against h / 2^{t-1}.
Integer g_k3_base_order(const ImQuadField& E);

}  // namespace k3br
