#pragma once

#include <string>
#include <string_view>

#include "k3br/factored_ideal.hpp"
#include "k3br/field.hpp"

namespace k3br {

/// Ideal literal grammar:
///
///   ideal := term ("*" term)*
///   term  := <p><tag>["^" <int>] | "(" <shorthand> ")" ["^" <int>]
///   tag   := r | i | s | t      (ramified, inert, split-first, split-conjugate)
///
/// A shorthand is a rational "(n)" / "(n/m)", expanded with factor_rational,
/// or an element "(a+b*w)" expanded with factor_element. Exponents may be
/// negative. Example: "2r^3*5s^2*5t^2".
FactoredIdeal parse_ideal(const ImQuadField& E, std::string_view text);

/// Canonical form of the same grammar: prime terms sorted, "(1)" for O_E.
std::string format_ideal(const FactoredIdeal& I);

char tag_char(PrimeTag tag);

/// "3", "-3/4". Throws ParseError.
Rational parse_rational(std::string_view text);

/// "a+b*w"-style element with rational coefficients.
FieldElement parse_element(const ImQuadField& E, std::string_view text);

}  // namespace k3br
