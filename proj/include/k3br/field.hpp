#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "k3br/arith.hpp"
#include "k3br/factored_ideal.hpp"

namespace k3br {

/// Multiplication rule of the integral basis {1, ω}: ω² = trace·ω - norm.
struct OmegaRule {
  int trace = 0;
  std::int64_t norm = 1;
  friend bool operator==(const OmegaRule&, const OmegaRule&) = default;
};

/// x + y·ω with rational coordinates.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(OmegaRule w, Rational x, Rational y = 0) : w_(w), x_(std::move(x)), y_(std::move(y)) {}

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  OmegaRule rule() const { return w_; }

  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_rational() const { return y_ == 0; }
  bool is_integral() const { return x_.get_den() == 1 && y_.get_den() == 1; }

  FieldElement operator-() const { return {w_, -x_, -y_}; }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const Rational& q, const FieldElement& a) { return {a.w_, q * a.x_, q * a.y_}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.x_ == b.x_ && a.y_ == b.y_; }

 private:
  OmegaRule w_;
  Rational x_ = 0;
  Rational y_ = 0;
};

FieldElement conj(const FieldElement& e);
Rational norm(const FieldElement& e);
Rational trace(const FieldElement& e);
FieldElement inv(const FieldElement& e);

std::string to_string(const FieldElement& e);
std::ostream& operator<<(std::ostream& os, const FieldElement& e);

enum class Splitting { Split, Inert, Ramified };
std::string to_string(Splitting s);

/// E = Q(√d), d < 0 squarefree.
struct ImQuadField {
  std::int64_t d = -1;
  std::int64_t D = -4;               ///< fundamental discriminant
  bool omega_half = false;           ///< ω = (1+√d)/2 when d ≡ 1 mod 4, else √d
  std::vector<std::int64_t> ramified_primes;
  int mu_order = 2;
  std::int64_t h = 1;
  FactoredIdeal different;           ///< D_E = (√D)

  OmegaRule rule() const;
  FieldElement element(Rational x, Rational y = 0) const { return {rule(), std::move(x), std::move(y)}; }
  FieldElement omega() const { return element(0, 1); }
  bool is_ramified(std::int64_t p) const;
  std::string name() const;
};

ImQuadField make_field(std::int64_t d);

/// Number of reduced primitive forms of discriminant D < 0.
std::int64_t class_number(std::int64_t D);
inline std::int64_t class_number(const ImQuadField& E) { return class_number(E.D); }

Splitting splitting_type(const ImQuadField& E, std::int64_t p);

/// All roots of unity of E; 1 comes first.
std::vector<FieldElement> roots_of_unity(const ImQuadField& E);

/// Primes of O_E above p, in tag order.
std::vector<PrimeIdeal> primes_above(const ImQuadField& E, std::int64_t p);
PrimeIdeal prime_ideal(const ImQuadField& E, std::int64_t p, PrimeTag tag);

}  // namespace k3br
