#pragma once

#include <compare>
#include <cstdint>
#include <map>

#include "k3br/arith.hpp"

namespace k3br {

enum class PrimeTag { Ramified, Inert, SplitFirst, SplitConj };

/// A prime ideal of O_E lying over the rational prime p.
///
/// Ramified and split primes are (p, ω - root); SplitFirst carries the
/// smallest root of the minimal polynomial of ω mod p, SplitConj the other
/// one. Inert primes are (p) and carry no root. Identity is (p, tag).
struct PrimeIdeal {
  std::int64_t p = 0;
  PrimeTag tag = PrimeTag::Inert;
  std::int64_t root = 0;
  std::int64_t conj_root = 0;

  std::int64_t norm() const { return tag == PrimeTag::Inert ? p * p : p; }
  bool is_split() const { return tag == PrimeTag::SplitFirst || tag == PrimeTag::SplitConj; }

  /// Residue-ring size N(P) as Integer.
  Integer norm_z() const { return Integer(static_cast<long>(norm())); }

  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) { return a.p == b.p && a.tag == b.tag; }
  friend std::strong_ordering operator<=>(const PrimeIdeal& a, const PrimeIdeal& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    return static_cast<int>(a.tag) <=> static_cast<int>(b.tag);
  }
};

PrimeIdeal conj(const PrimeIdeal& P);

/// Fractional ideal of O_E in factored form: prime -> nonzero exponent.
/// The empty map is the unit ideal (1).
class FactoredIdeal {
 public:
  using Map = std::map<PrimeIdeal, long>;

  FactoredIdeal() = default;
  explicit FactoredIdeal(Map factors);
  static FactoredIdeal prime(const PrimeIdeal& P, long exponent = 1);

  const Map& factors() const { return factors_; }
  auto begin() const { return factors_.begin(); }
  auto end() const { return factors_.end(); }

  long exponent(const PrimeIdeal& P) const;
  bool is_unit() const { return factors_.empty(); }
  bool is_integral() const;

  /// Absolute norm as a positive rational.
  Rational norm() const;

  FactoredIdeal inverse() const;
  FactoredIdeal pow(long k) const;

  friend FactoredIdeal operator*(const FactoredIdeal& a, const FactoredIdeal& b);
  friend FactoredIdeal operator/(const FactoredIdeal& a, const FactoredIdeal& b) { return a * b.inverse(); }
  FactoredIdeal& operator*=(const FactoredIdeal& b) { return *this = *this * b; }

  friend bool operator==(const FactoredIdeal&, const FactoredIdeal&) = default;

 private:
  Map factors_;
};

FactoredIdeal conj(const FactoredIdeal& I);

/// Fixed by complex conjugation, i.e. balanced exponents on split pairs.
bool is_ambiguous(const FactoredIdeal& I);

FactoredIdeal gcd(const FactoredIdeal& a, const FactoredIdeal& b);
FactoredIdeal lcm(const FactoredIdeal& a, const FactoredIdeal& b);

/// a | b, i.e. b ⊆ a.
bool divides(const FactoredIdeal& a, const FactoredIdeal& b);

/// The part of I supported on primes above p.
FactoredIdeal p_part(const FactoredIdeal& I, std::int64_t p);

/// Canonical total order: by norm, then by factor list. Used to sort reports.
bool canonical_less(const FactoredIdeal& a, const FactoredIdeal& b);

}  // namespace k3br
