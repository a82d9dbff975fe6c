#include "k3br/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "k3br/errors.hpp"
#include "k3br/residue.hpp"

namespace k3br {

namespace {

Integer lcm_z(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Hermite form of an integer lattice of rank 2 given by generator rows (x, y).
struct IntHnf {
  Integer a, b, c;
};

IntHnf int_hnf(const std::vector<std::pair<Integer, Integer>>& rows) {
  Integer px = 0, py = 0;  // pivot row, py = gcd of the y-column so far
  Integer acc = 0;         // gcd of x-entries of rows with y = 0
  for (const auto& [vx, vy] : rows) {
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), py.get_mpz_t(), vy.get_mpz_t());
    if (g == 0) {  // both rows have y = 0
      acc = gcd(acc, vx);
      continue;
    }
    // the complementary combination kills the y entry
    const Integer kx = (vy / g) * px - (py / g) * vx;
    acc = gcd(acc, kx);
    px = s * px + t * vx;
    py = g;
  }
  if (py < 0) {
    px = -px;
    py = -py;
  }
  acc = abs(acc);
  if (py == 0 || acc == 0) throw ValidationError("generators do not span a rank-2 module");
  Integer b = px - floor_div(px, acc) * acc;
  return {acc, b, py};
}

FieldElement gen_element(const ImQuadField& E, const PrimeIdeal& P, int which) {
  if (P.tag == PrimeTag::Inert) {
    return which == 0 ? E.element(static_cast<long>(P.p)) : E.element(0, static_cast<long>(P.p));
  }
  return which == 0 ? E.element(static_cast<long>(P.p)) : E.element(-static_cast<long>(P.root), 1);
}

}  // namespace

ZBasisIdeal hnf_span(std::span<const FieldElement> gens) {
  Integer L = 1;
  for (const auto& g : gens) {
    L = lcm_z(L, g.x().get_den());
    L = lcm_z(L, g.y().get_den());
  }
  std::vector<std::pair<Integer, Integer>> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    const Rational sx = g.x() * L, sy = g.y() * L;
    rows.emplace_back(sx.get_num(), sy.get_num());
  }
  const IntHnf h = int_hnf(rows);
  ZBasisIdeal z{Rational(h.a, L), Rational(h.b, L), Rational(h.c, L)};
  z.a.canonicalize();
  z.b.canonicalize();
  z.c.canonicalize();
  return z;
}

std::pair<FieldElement, FieldElement> basis_elements(const ImQuadField& E, const ZBasisIdeal& I) {
  return {E.element(I.a), E.element(I.b, I.c)};
}

ZBasisIdeal to_zbasis(const ImQuadField& E, const FactoredIdeal& I) {
  // I = M / s with M = Pos · conj(Neg) integral and s = N(Neg).
  FactoredIdeal::Map pos;
  FactoredIdeal neg_part;
  for (const auto& [P, e] : I) {
    if (e > 0) pos[P] += e;
    else neg_part *= FactoredIdeal::prime(P, -e);
  }
  for (const auto& [P, e] : conj(neg_part)) pos[P] += e;
  const Rational s = neg_part.norm();

  FieldElement u = E.element(1), v = E.omega();
  for (const auto& [P, e] : pos) {
    for (long k = 0; k < e; ++k) {
      const FieldElement p0 = gen_element(E, P, 0), p1 = gen_element(E, P, 1);
      const FieldElement prods[] = {u * p0, u * p1, v * p0, v * p1};
      const ZBasisIdeal z = hnf_span(prods);
      std::tie(u, v) = basis_elements(E, z);
    }
  }
  const FieldElement scaled[] = {(1 / s) * u, (1 / s) * v};
  return hnf_span(scaled);
}

bool contains(const ZBasisIdeal& I, const FieldElement& e) {
  Rational k = e.y() / I.c;
  k.canonicalize();
  if (k.get_den() != 1) return false;
  Rational r = (e.x() - k * I.b) / I.a;
  r.canonicalize();
  return r.get_den() == 1;
}

FactoredIdeal from_zbasis(const ImQuadField& E, const ZBasisIdeal& Z) {
  Integer m = 1;
  for (const Rational* q : {&Z.a, &Z.b, &Z.c}) m = lcm_z(m, q->get_den());
  const FieldElement g0 = E.element(Z.a * m), g1 = E.element(Z.b * m, Z.c * m);
  const Integer index = Rational(Z.index() * m * m).get_num();
  FactoredIdeal::Map f;
  for (const auto& [p, ignored] : factor_integer(index)) {
    for (const auto& P : primes_above(E, p)) {
      long k = 0;
      while (true) {
        const ZBasisIdeal Pk = to_zbasis(E, FactoredIdeal::prime(P, k + 1));
        if (!contains(Pk, g0) || !contains(Pk, g1)) break;
        ++k;
      }
      if (k != 0) f[P] = k;
    }
  }
  FactoredIdeal out = FactoredIdeal(std::move(f)) / factor_rational(E, Rational(m));
  if (!(to_zbasis(E, out) == Z)) throw ValidationError("Z-module is not an ideal of O_E");
  return out;
}

FactoredIdeal factor_rational(const ImQuadField& E, const Rational& q) {
  if (q == 0) throw ValidationError("cannot factor the zero ideal");
  FactoredIdeal::Map m;
  auto add = [&](const Integer& n, long sign) {
    if (n == 1) return;
    for (const auto& [p, e] : factor_integer(n)) {
      for (const auto& P : primes_above(E, p)) {
        m[P] += sign * (P.tag == PrimeTag::Ramified ? 2L * e : e);
      }
    }
  };
  add(abs(q.get_num()), 1);
  add(q.get_den(), -1);
  return FactoredIdeal(std::move(m));
}

FactoredIdeal factor_element(const ImQuadField& E, const FieldElement& e) {
  if (e.is_zero()) throw ValidationError("cannot factor the zero element");
  const Integer m = lcm_z(e.x().get_den(), e.y().get_den());
  const FieldElement z = Rational(m) * e;
  const Rational nz = norm(z);
  FactoredIdeal::Map out;
  for (const auto& [p, vp] : factor_integer(nz.get_num())) {
    const auto primes = primes_above(E, p);
    const PrimeIdeal& P = primes.front();
    if (P.tag == PrimeTag::Ramified) {
      out[P] += vp;
    } else if (P.tag == PrimeTag::Inert) {
      out[P] += vp / 2;
    } else {
      long v1 = 0;
      while (v1 < vp && contains(to_zbasis(E, FactoredIdeal::prime(P, v1 + 1)), z)) ++v1;
      out[primes[0]] += v1;
      out[primes[1]] += vp - v1;
    }
  }
  return FactoredIdeal(std::move(out)) / factor_rational(E, Rational(m));
}

void require_integral(const FactoredIdeal& I, const char* what) {
  if (!I.is_integral()) throw ValidationError(std::string(what) + " requires an integral ideal");
}

Integer euler_phi_E(const FactoredIdeal& I) {
  require_integral(I, "euler_phi_E");
  Integer phi = 1;
  for (const auto& [P, e] : I) {
    phi *= ipow(P.norm_z(), static_cast<unsigned long>(e - 1)) * (P.norm_z() - 1);
  }
  return phi;
}

Integer intersect_Z(const FactoredIdeal& I) {
  require_integral(I, "intersect_Z");
  if (!is_ambiguous(I)) throw ValidationError("intersect_Z requires an ambiguous ideal; take lcm(I, conj(I)) first");
  Integer J = 1;
  for (const auto& [P, e] : I) {
    const Integer p(static_cast<long>(P.p));
    switch (P.tag) {
      case PrimeTag::Ramified: J *= ipow(p, static_cast<unsigned long>((e + 1) / 2)); break;
      case PrimeTag::Inert:
      case PrimeTag::SplitFirst: J *= ipow(p, static_cast<unsigned long>(e)); break;
      case PrimeTag::SplitConj: break;
    }
  }
  return J;
}

Integer unit_residue_index(const ImQuadField& E, const FactoredIdeal& I) {
  require_integral(I, "unit_residue_index");
  const ZBasisIdeal Z = to_zbasis(E, I);
  const auto mu = roots_of_unity(E);
  long fixed = 0;
  for (const auto& zeta : mu) {
    if (contains(Z, zeta - E.element(1))) ++fixed;
  }
  return Integer(static_cast<long>(mu.size()) / fixed);
}

std::optional<FieldElement> is_principal(const ImQuadField& E, const FactoredIdeal& I) {
  if (I.is_unit()) return E.element(1);
  // I = M / s with M integral, s a positive integer.
  FactoredIdeal neg;
  for (const auto& [P, e] : I) {
    if (e < 0) neg *= FactoredIdeal::prime(P, -e);
  }
  const Rational s = neg.norm();
  const FactoredIdeal M = I * factor_rational(E, s);
  const ZBasisIdeal Z = to_zbasis(E, M);
  const Integer A = Z.a.get_num(), B = Z.b.get_num(), C = Z.c.get_num();
  const Integer T = M.norm().get_num();
  const Integer absD = -E.D;
  const int t = E.rule().trace;

  // N(x + yω) = (x + t·y/2)² + |D|·y²/4, so 4·T - |D|·y² = (2x + t·y)².
  Integer ymax = sqrt(4 * T / absD) + 1;
  Integer vmax = ymax / C + 1;
  for (Integer v = 0; v <= vmax; ++v) {
    for (int sv : {1, -1}) {
      if (v == 0 && sv == -1) continue;
      const Integer y = sv * v * C;
      const Integer rem = 4 * T - absD * y * y;
      if (rem < 0) continue;
      const Integer root = sqrt(rem);
      if (root * root != rem) continue;
      for (int sr : {1, -1}) {
        const Integer twox = sr * root - t * y;
        if (twox % 2 != 0) continue;
        const Integer x = twox / 2;
        // lattice membership: x ≡ (y/C)·B mod A
        const Integer diff = x - (y / C) * B;
        if (diff % A != 0) continue;
        return E.element(Rational(x) / s, Rational(y) / s);
      }
    }
  }
  return std::nullopt;
}

std::vector<Integer> abelian_invariants(const FactoredIdeal& I) {
  require_integral(I, "abelian_invariants");
  std::map<std::int64_t, std::vector<Integer>> by_prime;
  for (const auto& [P, e] : I) {
    const Integer p(static_cast<long>(P.p));
    auto& v = by_prime[P.p];
    switch (P.tag) {
      case PrimeTag::SplitFirst:
      case PrimeTag::SplitConj: v.push_back(ipow(p, e)); break;
      case PrimeTag::Inert:
        v.push_back(ipow(p, e));
        v.push_back(ipow(p, e));
        break;
      case PrimeTag::Ramified:
        v.push_back(ipow(p, (e + 1) / 2));
        if (e / 2 > 0) v.push_back(ipow(p, e / 2));
        break;
    }
  }
  std::size_t len = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.begin(), v.end(), std::greater<>());
    len = std::max(len, v.size());
  }
  std::vector<Integer> inv(len, Integer(1));
  // inv is filled largest-first, then reversed to ascending
  for (const auto& [p, v] : by_prime) {
    for (std::size_t j = 0; j < v.size(); ++j) inv[j] *= v[j];
  }
  std::reverse(inv.begin(), inv.end());
  return inv;
}

Integer ray_class_number(const ImQuadField& E, const FactoredIdeal& I) {
  const Integer num = Integer(static_cast<long>(E.h)) * euler_phi_E(I);
  const Integer idx = unit_residue_index(E, I);
  if (num % idx != 0) throw InternalError("ray class number is not an integer");
  return num / idx;
}

bool residue_units_galois_trivial(const ImQuadField& E, const FactoredIdeal& J, std::int64_t bound) {
  require_integral(J, "residue_units_galois_trivial");
  if (!is_ambiguous(J)) throw ValidationError("residue_units_galois_trivial requires an ambiguous ideal");
  const ResidueRing R(E, J, bound);
  std::vector<ResidueRing::Elem> mu;
  for (const auto& z : roots_of_unity(E)) mu.push_back(R.reduce(z));
  for (const std::int64_t idx : R.units()) {
    const auto u = R.at(idx);
    const auto cu = R.conj(u);
    const bool ok = std::any_of(mu.begin(), mu.end(), [&](const auto& z) { return R.mul(z, u) == cu; });
    if (!ok) return false;
  }
  return true;
}

std::vector<FactoredIdeal> integral_ideals_up_to(const ImQuadField& E, std::int64_t bound) {
  std::vector<PrimeIdeal> primes;
  for (std::int64_t p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    for (const auto& P : primes_above(E, p)) {
      if (P.norm() <= bound) primes.push_back(P);
    }
  }
  std::stable_sort(primes.begin(), primes.end(),
                   [](const PrimeIdeal& x, const PrimeIdeal& y) { return x.norm() < y.norm(); });
  std::vector<FactoredIdeal> out;
  FactoredIdeal::Map cur;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t nrm) {
    if (i == primes.size() || primes[i].norm() > bound / nrm) {
      out.emplace_back(cur);
      return;
    }
    rec(i + 1, nrm);
    const PrimeIdeal& P = primes[i];
    std::int64_t n = nrm;
    long e = 0;
    while (n <= bound / P.norm()) {
      n *= P.norm();
      cur[P] = ++e;
      rec(i + 1, n);
    }
    cur.erase(P);
  };
  rec(0, 1);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<FactoredIdeal> integral_divisors(const FactoredIdeal& I) {
  require_integral(I, "integral_divisors");
  std::vector<FactoredIdeal> out{FactoredIdeal{}};
  for (const auto& [P, e] : I) {
    std::vector<FactoredIdeal> next;
    for (const auto& d : out) {
      for (long k = 0; k <= e; ++k) next.push_back(d * FactoredIdeal::prime(P, k));
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace k3br
