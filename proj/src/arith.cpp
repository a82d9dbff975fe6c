#include "k3br/arith.hpp"

#include <string>

#include "k3br/errors.hpp"

namespace k3br {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t f = 5; f * f <= n; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factor_integer(n)) {
    if (e > 1) return false;
  }
  return true;
}

std::vector<PrimePower> factor_integer(std::int64_t n) {
  if (n == 0) throw ValidationError("cannot factor 0");
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(static_cast<std::int64_t>(p), e);
  }
  if (m > 1) out.emplace_back(static_cast<std::int64_t>(m), 1);
  return out;
}

std::vector<PrimePower> factor_integer(const Integer& n) {
  return factor_integer(to_int64(n));
}

int valuation(const Integer& n, std::int64_t p) {
  if (n == 0) throw ValidationError("valuation of 0");
  Integer m = abs(n);
  const Integer pp = static_cast<long>(p);
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
    m /= pp;
    ++v;
  }
  return v;
}

namespace {

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  __int128 result = 1;
  __int128 base = mod(b, m);
  while (e > 0) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

}  // namespace

int kronecker(std::int64_t D, std::int64_t p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (p == 2) {
    if (D % 2 == 0) return 0;
    const std::int64_t r = mod(D, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  const std::int64_t r = mod(D, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

Integer euler_phi(const Integer& n) {
  if (n <= 0) throw ValidationError("totient of a nonpositive integer");
  Integer phi = 1;
  for (const auto& [p, e] : factor_integer(n)) {
    phi *= ipow(Integer(static_cast<long>(p)), e - 1) * (p - 1);
  }
  return phi;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw BoundExceeded("integer " + v.get_str() + " exceeds the 64-bit working range");
  return v.get_si();
}

}  // namespace k3br
