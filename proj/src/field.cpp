#include "k3br/field.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "k3br/errors.hpp"

namespace k3br {

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.rule() == b.rule())) throw ValidationError("elements of different fields");
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.w_, a.x_ + b.x_, a.y_ + b.y_};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.w_, a.x_ - b.x_, a.y_ - b.y_};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const Rational n(static_cast<long>(a.w_.norm));
  const Rational yy = a.y_ * b.y_;
  return {a.w_, a.x_ * b.x_ - n * yy, a.x_ * b.y_ + a.y_ * b.x_ + a.w_.trace * yy};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * inv(b); }

FieldElement conj(const FieldElement& e) {
  return {e.rule(), e.x() + e.rule().trace * e.y(), -e.y()};
}

Rational norm(const FieldElement& e) {
  const auto w = e.rule();
  return e.x() * e.x() + w.trace * e.x() * e.y() + Rational(static_cast<long>(w.norm)) * e.y() * e.y();
}

Rational trace(const FieldElement& e) { return 2 * e.x() + e.rule().trace * e.y(); }

FieldElement inv(const FieldElement& e) {
  if (e.is_zero()) throw ValidationError("inverse of zero");
  const Rational n = norm(e);
  const FieldElement c = conj(e);
  return {e.rule(), c.x() / n, c.y() / n};
}

std::string to_string(const FieldElement& e) {
  std::ostringstream os;
  if (e.y() == 0) {
    os << e.x();
    return os.str();
  }
  if (e.x() != 0) os << e.x() << (e.y() > 0 ? "+" : "-");
  else if (e.y() < 0) os << "-";
  const Rational ay = abs(e.y());
  if (ay != 1) os << ay << "*";
  os << "w";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << to_string(e); }

std::string to_string(Splitting s) {
  switch (s) {
    case Splitting::Split: return "Split";
    case Splitting::Inert: return "Inert";
    case Splitting::Ramified: return "Ramified";
  }
  return "?";
}

OmegaRule ImQuadField::rule() const {
  if (omega_half) return {1, (1 - d) / 4};
  return {0, -d};
}

bool ImQuadField::is_ramified(std::int64_t p) const { return D % p == 0; }

std::string ImQuadField::name() const { return "Q(sqrt(" + std::to_string(d) + "))"; }

ImQuadField make_field(std::int64_t d) {
  if (d >= 0) throw ValidationError("d must be negative, got " + std::to_string(d));
  if (!is_squarefree(d)) throw ValidationError("d must be squarefree, got " + std::to_string(d));
  ImQuadField E;
  E.d = d;
  E.omega_half = mod(d, 4) == 1;
  E.D = E.omega_half ? d : 4 * d;
  for (const auto& [p, e] : factor_integer(E.D)) E.ramified_primes.push_back(p);
  E.mu_order = E.D == -3 ? 6 : (E.D == -4 ? 4 : 2);
  E.h = class_number(E.D);
  FactoredIdeal::Map diff;
  for (const auto& [p, e] : factor_integer(E.D)) diff[prime_ideal(E, p, PrimeTag::Ramified)] = e;
  E.different = FactoredIdeal(std::move(diff));
  return E;
}

std::int64_t class_number(std::int64_t D) {
  if (D >= 0 || (mod(D, 4) != 0 && mod(D, 4) != 1)) {
    throw ValidationError("not a negative discriminant: " + std::to_string(D));
  }
  const std::int64_t absD = -D;
  std::int64_t count = 0;
  for (std::int64_t a = 1; 3 * a * a <= absD; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

Splitting splitting_type(const ImQuadField& E, std::int64_t p) {
  const int k = kronecker(E.D, p);
  if (k == 0) return Splitting::Ramified;
  return k == 1 ? Splitting::Split : Splitting::Inert;
}

std::vector<FieldElement> roots_of_unity(const ImQuadField& E) {
  std::vector<FieldElement> mu{E.element(1), E.element(-1)};
  if (E.D == -4) {
    mu.push_back(E.element(0, 1));
    mu.push_back(E.element(0, -1));
  } else if (E.D == -3) {
    mu.push_back(E.element(0, 1));
    mu.push_back(E.element(0, -1));
    mu.push_back(E.element(-1, 1));
    mu.push_back(E.element(1, -1));
  }
  return mu;
}

std::vector<PrimeIdeal> primes_above(const ImQuadField& E, std::int64_t p) {
  const Splitting s = splitting_type(E, p);
  if (s == Splitting::Inert) return {PrimeIdeal{p, PrimeTag::Inert, 0, 0}};
  // roots of x² - t·x + n mod p, t = tr ω, n = N ω
  const auto w = E.rule();
  std::vector<std::int64_t> roots;
  for (std::int64_t b = 0; b < p; ++b) {
    const __int128 f = static_cast<__int128>(b) * b - static_cast<__int128>(w.trace) * b + w.norm;
    if (f % p == 0) roots.push_back(b);
  }
  if (s == Splitting::Ramified) {
    if (roots.size() != 1) throw InternalError("ramified prime without a double root");
    return {PrimeIdeal{p, PrimeTag::Ramified, roots[0], roots[0]}};
  }
  if (roots.size() != 2) throw InternalError("split prime without two roots");
  return {PrimeIdeal{p, PrimeTag::SplitFirst, roots[0], roots[1]},
          PrimeIdeal{p, PrimeTag::SplitConj, roots[1], roots[0]}};
}

PrimeIdeal prime_ideal(const ImQuadField& E, std::int64_t p, PrimeTag tag) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  for (const auto& P : primes_above(E, p)) {
    if (P.tag == tag) return P;
  }
  throw ValidationError("no prime of that type above " + std::to_string(p) + " in " + E.name() + " (" +
                        to_string(splitting_type(E, p)) + ")");
}

}  // namespace k3br
