#include "k3br/residue.hpp"

#include <string>

#include "k3br/errors.hpp"

namespace k3br {

namespace {

struct IntBasis {
  std::int64_t a, b, c;
};

IntBasis int_basis(const ZBasisIdeal& z) {
  if (!z.is_integral()) throw ValidationError("residue ring of a non-integral ideal");
  return {to_int64(z.a.get_num()), to_int64(z.b.get_num()), to_int64(z.c.get_num())};
}

}  // namespace

ResidueRing::ResidueRing(const ImQuadField& E, const FactoredIdeal& I, std::int64_t bound) : w_(E.rule()) {
  require_integral(I, "ResidueRing");
  const Rational n = I.norm();
  if (n > bound) {
    throw BoundExceeded("residue enumeration of an ideal of norm " + n.get_str() + " exceeds the bound " +
                        std::to_string(bound));
  }
  const IntBasis z = int_basis(to_zbasis(E, I));
  a_ = z.a;
  b_ = z.b;
  c_ = z.c;
  for (const auto& [P, e] : I) primes_.push_back(to_zbasis(E, FactoredIdeal::prime(P)));
}

ResidueRing::Elem ResidueRing::reduce(std::int64_t x, std::int64_t y) const {
  const std::int64_t ry = mod(y, c_);
  const std::int64_t q = (y - ry) / c_;
  const __int128 rx = static_cast<__int128>(x) - static_cast<__int128>(q) * b_;
  __int128 m = rx % a_;
  if (m < 0) m += a_;
  return {static_cast<std::int64_t>(m), ry};
}

ResidueRing::Elem ResidueRing::reduce(const FieldElement& e) const {
  if (!e.is_integral()) throw ValidationError("cannot reduce a non-integral element");
  return reduce(to_int64(e.x().get_num()), to_int64(e.y().get_num()));
}

ResidueRing::Elem ResidueRing::mul(Elem u, Elem v) const {
  const __int128 yy = static_cast<__int128>(u.y) * v.y;
  const __int128 x = static_cast<__int128>(u.x) * v.x - static_cast<__int128>(w_.norm) * yy;
  const __int128 y = static_cast<__int128>(u.x) * v.y + static_cast<__int128>(u.y) * v.x + w_.trace * yy;
  // reduce y first, then fold its quotient into x
  __int128 ry = y % c_;
  if (ry < 0) ry += c_;
  const __int128 q = (y - ry) / c_;
  __int128 rx = (x - q * b_) % a_;
  if (rx < 0) rx += a_;
  return {static_cast<std::int64_t>(rx), static_cast<std::int64_t>(ry)};
}

ResidueRing::Elem ResidueRing::conj(Elem u) const { return reduce(u.x + w_.trace * u.y, -u.y); }

bool ResidueRing::is_unit(Elem u) const {
  for (const auto& P : primes_) {
    const std::int64_t pa = P.a.get_num().get_si(), pb = P.b.get_num().get_si(), pc = P.c.get_num().get_si();
    if (u.y % pc == 0 && (u.x - (u.y / pc) * pb) % pa == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> ResidueRing::units() const {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < size(); ++i) {
    if (is_unit(at(i))) out.push_back(i);
  }
  return out;
}

}  // namespace k3br
