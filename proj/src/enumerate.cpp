#include "k3br/enumerate.hpp"

#include <algorithm>
#include <functional>

#include "k3br/errors.hpp"
#include "k3br/literal.hpp"

namespace k3br {

Rational block_ratio(const ImQuadField& E, const PrimeBlock& block) {
  if (block.exponent < 0) throw ValidationError("block exponent must be >= 0");
  if (block.exponent == 0) return 1;
  const Integer p(static_cast<long>(block.p));
  const auto e = static_cast<unsigned long>(block.exponent);
  switch (splitting_type(E, block.p)) {
    case Splitting::Split: return Rational(ipow(p, e - 1) * (p - 1));
    case Splitting::Inert: return Rational(ipow(p, e - 1) * (p + 1));
    case Splitting::Ramified: return Rational(2 * ipow(p, e / 2));
  }
  return 1;
}

FactoredIdeal block_ideal(const ImQuadField& E, const PrimeBlock& block) {
  FactoredIdeal I;
  for (const auto& P : primes_above(E, block.p)) I *= FactoredIdeal::prime(P, block.exponent);
  return I;
}

int default_two_exp_cap(const Integer& n) {
  const int log2n = static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
  return 2 * (log2n + 8);
}

namespace {

struct Candidate {
  std::vector<PrimeBlock> blocks;
};

}  // namespace

EnumerationReport enumerate_kept(const ImQuadField& E, const Integer& n, const EnumerationOptions& options) {
  if (n < 1) throw ValidationError("degree n must be >= 1");
  EnumerationReport rep;
  rep.field = E;
  rep.n = n;

  const bool two_ramified = E.is_ramified(2);
  const int two_cap = options.two_exp_cap.value_or(default_two_exp_cap(n));
  if (two_cap < 0) throw ValidationError("2-exponent ceiling must be >= 0");

  // H¹ data for each exponent of the ramified-2 block.
  std::vector<H1Bound> h1_by_m;
  Integer h1_cap = 1;
  if (two_ramified) {
    const PrimeIdeal P2 = primes_above(E, 2).front();
    for (int m = 0; m <= two_cap; ++m) {
      h1_by_m.push_back(h1_bound(E, FactoredIdeal::prime(P2, m)));
      h1_cap = std::max(h1_cap, h1_by_m.back().value);
    }
    rep.prime_caps[2] = two_cap;
  } else {
    h1_by_m.emplace_back(H1Bound{});
  }
  const Integer base_slack = n * E.mu_order * over_q::kNormUnitIndex * over_q::kDegree;
  rep.global_slack = base_slack * h1_cap;

  // Primes whose smallest block fits under the slack. Unramified ones have
  // smallest ratio p-1 or p+1, so p <= slack + 1; every ramified prime has
  // ratio 2 however large it is.
  const Integer& S = rep.global_slack;
  std::vector<std::int64_t> primes;
  const std::int64_t pmax = to_int64(S) + 1;
  for (std::int64_t p = 2; p <= pmax; ++p) {
    if (!is_prime(p) || E.is_ramified(p)) continue;
    if (block_ratio(E, {p, 1}) <= S) primes.push_back(p);
  }
  for (const std::int64_t r : E.ramified_primes) {
    if (r != 2 && block_ratio(E, {r, 1}) <= S) primes.push_back(r);
  }
  std::sort(primes.begin(), primes.end());

  auto explicit_cap = [&](std::int64_t p) -> std::optional<int> {
    if (p == 2 && two_ramified) return two_cap;
    if (auto it = options.prime_caps.find(p); it != options.prime_caps.end()) return it->second;
    return std::nullopt;
  };

  std::vector<KeptIdeal> kept;
  auto evaluate = [&](const std::vector<PrimeBlock>& blocks, const H1Bound& h1) {
    FactoredIdeal I;
    for (const auto& b : blocks) I *= block_ideal(E, b);
    K3OrderEstimate est = g_k3_order_with_h1(E, I, h1);
    if (!g_k3_divides(est, n)) return;
    for (const auto& b : blocks) {
      if (auto cap = explicit_cap(b.p); cap && b.exponent >= *cap) rep.cap_saturated = true;
    }
    kept.push_back({std::move(I), std::move(est)});
  };

  for (int m = 0; m < static_cast<int>(h1_by_m.size()); ++m) {
    const H1Bound& h1 = h1_by_m[m];
    std::vector<PrimeBlock> blocks;
    Rational used = 1;
    if (two_ramified && m > 0) {
      blocks.push_back({2, m});
      used = block_ratio(E, {2, m});
    }
    const Rational slack(base_slack * h1.value);
    if (used > slack) continue;

    std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& prod) {
      if (i == primes.size()) {
        evaluate(blocks, h1);
        return;
      }
      rec(i + 1, prod);
      const std::int64_t p = primes[i];
      const auto cap = options.prime_caps.find(p);
      for (int k = 1;; ++k) {
        if (cap != options.prime_caps.end() && k > cap->second) break;
        const Rational next = prod * block_ratio(E, {p, k});
        if (next > slack) break;
        int& used_cap = rep.prime_caps[p];
        if (cap == options.prime_caps.end()) used_cap = std::max(used_cap, k);
        else used_cap = cap->second;
        blocks.push_back({p, k});
        rec(i + 1, next);
        blocks.pop_back();
      }
    };
    rec(0, used);
  }

  std::sort(kept.begin(), kept.end(),
            [](const KeptIdeal& a, const KeptIdeal& b) { return canonical_less(a.ideal, b.ideal); });
  rep.kept = std::move(kept);
  return rep;
}

}  // namespace k3br
