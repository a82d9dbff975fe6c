#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace k3br {

using Integer = mpz_class;
using Rational = mpq_class;

using PrimePower = std::pair<std::int64_t, int>;

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);

/// Trial-division factorisation of |n|, n != 0. Primes ascending.
std::vector<PrimePower> factor_integer(std::int64_t n);
std::vector<PrimePower> factor_integer(const Integer& n);

/// p-adic valuation of a nonzero integer.
int valuation(const Integer& n, std::int64_t p);

/// Kronecker symbol (D/p) for a prime p.
int kronecker(std::int64_t D, std::int64_t p);

/// Classical Euler totient of a positive integer.
Integer euler_phi(const Integer& n);

Integer ipow(const Integer& base, unsigned long exp);

/// Floor-mod with a nonnegative result.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Narrowing conversion that refuses values outside int64.
std::int64_t to_int64(const Integer& v);

}  // namespace k3br
