#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "k3br/factored_ideal.hpp"
#include "k3br/field.hpp"

namespace k3br {

using Gram = std::array<std::array<Rational, 2>, 2>;

/// Ideal lattice (I, α) with the form q(x, y) = Tr(α·x·conj(y)) and a level
/// structure given by a fractional ideal J ⊇ I*. α is rational since α = ᾱ.
struct IdealLatticeLS {
  FactoredIdeal I;
  Rational alpha = 1;
  FactoredIdeal level_J;

  friend bool operator==(const IdealLatticeLS&, const IdealLatticeLS&) = default;
};

/// Validates α != 0 and I* ⊆ J.
IdealLatticeLS make_lattice(const ImQuadField& E, FactoredIdeal I, Rational alpha, FactoredIdeal level_J);

/// Gram matrix of q on the Hermite basis of I.
Gram gram(const ImQuadField& E, const FactoredIdeal& I, const Rational& alpha);
Rational det(const Gram& g);
bool is_integral(const Gram& g);

/// (α)·I·conj(I) ⊆ D_E⁻¹.
bool is_integral_lattice(const ImQuadField& E, const FactoredIdeal& I, const Rational& alpha);

/// I* = (α)⁻¹·D_E⁻¹·conj(I)⁻¹.
FactoredIdeal dual_lattice(const ImQuadField& E, const FactoredIdeal& I, const Rational& alpha);

/// The dual computed from the inverse Gram matrix, independently of the formula.
FactoredIdeal gram_dual(const ImQuadField& E, const FactoredIdeal& I, const Rational& alpha);

FactoredIdeal dual_lattice(const ImQuadField& E, const IdealLatticeLS& L);

/// I_B = I*·J⁻¹, integral.
FactoredIdeal level_ideal(const ImQuadField& E, const IdealLatticeLS& L);

/// e·(I, α, J) = (eI, α/N(e), eJ).
IdealLatticeLS scale(const ImQuadField& E, const FieldElement& e, const IdealLatticeLS& L);

/// Some e with L2 = e·L1, trying ζ·g over μ(E) in order for a generator g
/// of I₂·I₁⁻¹.
std::optional<FieldElement> equivalent(const ImQuadField& E, const IdealLatticeLS& L1, const IdealLatticeLS& L2);

/// The level structure on (I, α) whose level ideal is `target`.
IdealLatticeLS level_from_brauer_order(const ImQuadField& E, const FactoredIdeal& I, const Rational& alpha,
                                       const FactoredIdeal& target);

/// lat(<ideal>; alpha=<rational>; J=<ideal>)
IdealLatticeLS parse_lattice(const ImQuadField& E, std::string_view text);
std::string format_lattice(const IdealLatticeLS& L);

}  // namespace k3br
