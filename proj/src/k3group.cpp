#include "k3br/k3group.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "k3br/errors.hpp"
#include "k3br/literal.hpp"
#include "k3br/residue.hpp"

namespace k3br {

Integer e_ramification(const ImQuadField& E, const Integer& J) {
  if (J < 1) throw ValidationError("e_ramification needs J >= 1");
  Integer e = over_q::kArchimedeanRamification;
  for (const std::int64_t r : E.ramified_primes) {
    if (!mpz_divisible_ui_p(J.get_mpz_t(), static_cast<unsigned long>(r))) e *= 2;
  }
  return e;
}

Integer norm_unit_index(const ImQuadField&, const FactoredIdeal&) { return over_q::kNormUnitIndex; }

H1Bound h1_bound(const ImQuadField& E, const FactoredIdeal& I) {
  require_integral(I, "h1_bound");
  if (!is_ambiguous(I)) throw ValidationError("h1_bound requires an ambiguous ideal");
  const FactoredIdeal I2 = p_part(I, 2);
  if (I2.is_unit() || !E.is_ramified(2)) return {};

  const int m = static_cast<int>(I2.begin()->second);
  const int delta = std::countr_zero(static_cast<std::uint64_t>(-E.D));  // v₂(D), 2 or 3
  const int k = std::max(0, (m - delta + 1) / 2);
  if (k > m / 2) throw InternalError("h1_bound: fixed-residue exponent out of range");
  H1Bound b;
  b.exact = false;
  b.invariant_unit_index = ipow(Integer(2), static_cast<unsigned long>(m / 2 - k));
  // one prime above 2 in S(J₂), ramification index 2
  b.value = 2 * b.invariant_unit_index;
  return b;
}

K3OrderEstimate g_k3_order_with_h1(const ImQuadField& E, const FactoredIdeal& I, const H1Bound& h1) {
  K3OrderEstimate est;
  est.ideal = I;
  est.J = intersect_Z(I);
  est.phi_E = euler_phi_E(I);
  est.phi_J = euler_phi(est.J);
  est.unit_index = unit_residue_index(E, I);
  est.e_factor = e_ramification(E, est.J);

  const Integer num = Integer(static_cast<long>(E.h)) * est.phi_E * norm_unit_index(E, I) * over_q::kDegree;
  const Integer den = over_q::kClassNumberF * est.phi_J * est.unit_index * est.e_factor;
  if (num % den != 0) {
    throw InternalError("K3 class group numerator is not an integer for I = " + format_ideal(I) + ": " +
                        num.get_str() + "/" + den.get_str());
  }
  est.numerator_A = num / den;
  if (est.numerator_A <= 0) throw InternalError("nonpositive K3 class group numerator");

  est.h1_invariant_unit_index = h1.invariant_unit_index;
  if (h1.exact) {
    est.h1_exact = h1.value;
    est.h1_upper = h1.value;
    if (est.numerator_A % h1.value != 0) throw InternalError("|H1| does not divide the numerator");
    est.possible_orders = {est.numerator_A / h1.value};
  } else {
    est.h1_upper = h1.value;
    for (Integer h = 1; h <= h1.value; h *= 2) {
      if (h1.value % h == 0 && est.numerator_A % h == 0) est.possible_orders.push_back(est.numerator_A / h);
    }
    std::sort(est.possible_orders.begin(), est.possible_orders.end());
  }
  return est;
}

K3OrderEstimate g_k3_order(const ImQuadField& E, const FactoredIdeal& I) {
  require_integral(I, "g_k3_order");
  const FactoredIdeal amb = lcm(I, conj(I));
  return g_k3_order_with_h1(E, amb, h1_bound(E, amb));
}

bool g_k3_divides(const K3OrderEstimate& est, const Integer& n) {
  if (n < 1) throw ValidationError("degree n must be >= 1");
  const Integer target = n * est.h1_upper;
  return target % est.numerator_A == 0;
}

bool g_k3_divides(const ImQuadField& E, const FactoredIdeal& I, const Integer& n) {
  return g_k3_divides(g_k3_order(E, I), n);
}

Integer g_k3_base_order(const ImQuadField& E) {
  const K3OrderEstimate est = g_k3_order(E, FactoredIdeal{});
  const Integer genus = ipow(Integer(2), E.ramified_primes.size() - 1);
  const Integer h(static_cast<long>(E.h));
  if (h % genus != 0 || est.numerator_A != h / genus) {
    throw InternalError("K3 class number of " + E.name() + " disagrees with genus theory");
  }
  return est.numerator_A;
}

}  // namespace k3br
