#include "k3br/factored_ideal.hpp"

#include <algorithm>

#include "k3br/errors.hpp"

namespace k3br {

PrimeIdeal conj(const PrimeIdeal& P) {
  PrimeIdeal Q = P;
  if (P.tag == PrimeTag::SplitFirst) Q.tag = PrimeTag::SplitConj;
  if (P.tag == PrimeTag::SplitConj) Q.tag = PrimeTag::SplitFirst;
  std::swap(Q.root, Q.conj_root);
  return Q;
}

FactoredIdeal::FactoredIdeal(Map factors) : factors_(std::move(factors)) {
  std::erase_if(factors_, [](const auto& kv) { return kv.second == 0; });
}

FactoredIdeal FactoredIdeal::prime(const PrimeIdeal& P, long exponent) {
  return FactoredIdeal(Map{{P, exponent}});
}

long FactoredIdeal::exponent(const PrimeIdeal& P) const {
  auto it = factors_.find(P);
  return it == factors_.end() ? 0 : it->second;
}

bool FactoredIdeal::is_integral() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& kv) { return kv.second > 0; });
}

Rational FactoredIdeal::norm() const {
  Integer num = 1, den = 1;
  for (const auto& [P, e] : factors_) {
    if (e > 0) num *= ipow(P.norm_z(), static_cast<unsigned long>(e));
    else den *= ipow(P.norm_z(), static_cast<unsigned long>(-e));
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

FactoredIdeal FactoredIdeal::inverse() const {
  Map m = factors_;
  for (auto& kv : m) kv.second = -kv.second;
  return FactoredIdeal(std::move(m));
}

FactoredIdeal FactoredIdeal::pow(long k) const {
  Map m = factors_;
  for (auto& kv : m) kv.second *= k;
  return FactoredIdeal(std::move(m));
}

FactoredIdeal operator*(const FactoredIdeal& a, const FactoredIdeal& b) {
  FactoredIdeal::Map m = a.factors_;
  for (const auto& [P, e] : b.factors_) m[P] += e;
  return FactoredIdeal(std::move(m));
}

FactoredIdeal conj(const FactoredIdeal& I) {
  FactoredIdeal::Map m;
  for (const auto& [P, e] : I) m[conj(P)] = e;
  return FactoredIdeal(std::move(m));
}

bool is_ambiguous(const FactoredIdeal& I) { return conj(I) == I; }

namespace {

template <typename Pick>
FactoredIdeal combine(const FactoredIdeal& a, const FactoredIdeal& b, Pick pick) {
  FactoredIdeal::Map m;
  for (const auto& [P, e] : a) m[P] = pick(e, b.exponent(P));
  for (const auto& [P, e] : b) m[P] = pick(a.exponent(P), e);
  return FactoredIdeal(std::move(m));
}

}  // namespace

FactoredIdeal gcd(const FactoredIdeal& a, const FactoredIdeal& b) {
  return combine(a, b, [](long x, long y) { return std::min(x, y); });
}

FactoredIdeal lcm(const FactoredIdeal& a, const FactoredIdeal& b) {
  return combine(a, b, [](long x, long y) { return std::max(x, y); });
}

bool divides(const FactoredIdeal& a, const FactoredIdeal& b) {
  for (const auto& [P, e] : a) {
    if (e > b.exponent(P)) return false;
  }
  for (const auto& [P, e] : b) {
    if (e < a.exponent(P)) return false;
  }
  return true;
}

FactoredIdeal p_part(const FactoredIdeal& I, std::int64_t p) {
  FactoredIdeal::Map m;
  for (const auto& [P, e] : I) {
    if (P.p == p) m[P] = e;
  }
  return FactoredIdeal(std::move(m));
}

bool canonical_less(const FactoredIdeal& a, const FactoredIdeal& b) {
  const Rational na = a.norm(), nb = b.norm();
  if (na != nb) return na < nb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace k3br
