#include <gtest/gtest.h>

#include <random>

#include "k3br/errors.hpp"
#include "k3br/ideal.hpp"
#include "k3br/lattice.hpp"
#include "k3br/literal.hpp"
#include "oracles.hpp"

using namespace k3br;

namespace {

Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Gram diag(long a, long b) { return Gram{{{Rational(a), Rational(0)}, {Rational(0), Rational(b)}}}; }

// congruent Gram matrices share determinant and integrality
bool same_invariants(const Gram& a, const Gram& b) {
  return det(a) == det(b) && is_integral(a) == is_integral(b);
}

}  // namespace

TEST(Lattice, GaussianGram) {
  const ImQuadField E = make_field(-1);
  EXPECT_EQ(gram(E, FactoredIdeal{}, 1), diag(2, 2));
  EXPECT_EQ(gram(E, FactoredIdeal{}, Rational(1, 2)), diag(1, 1));
  EXPECT_EQ(det(gram(E, FactoredIdeal{}, 1)), 4);
  EXPECT_TRUE(is_integral(diag(1, 1)));
  EXPECT_FALSE(is_integral(Gram{{{Rational(1), Rational(1, 2)}, {Rational(1, 2), Rational(1)}}}));
}

TEST(Lattice, GramIsSymmetricAndDetMatches) {
  std::mt19937_64 rng(11);
  for (const std::int64_t d : {-1, -2, -3, -5, -7, -15, -23}) {
    const ImQuadField E = make_field(d);
    for (int it = 0; it < 40; ++it) {
      const FactoredIdeal I = oracle::random_fractional(E, rng, {2, 3, 5, 7}, 2);
      const Rational alpha = frac(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 5));
      const Gram g = gram(E, I, alpha);
      EXPECT_EQ(g[0][1], g[1][0]);
      const Rational N = I.norm();
      EXPECT_EQ(det(g), alpha * alpha * Rational(-E.D) * N * N) << d << " " << format_ideal(I);
      // conjugation is an isometry
      EXPECT_TRUE(same_invariants(g, gram(E, conj(I), alpha)));
    }
  }
}

TEST(Lattice, IntegralityBothWays) {
  const ImQuadField E = make_field(-1);
  EXPECT_TRUE(is_integral_lattice(E, FactoredIdeal{}, Rational(1, 2)));
  EXPECT_TRUE(is_integral_lattice(E, FactoredIdeal{}, 1));
  EXPECT_FALSE(is_integral_lattice(E, FactoredIdeal{}, Rational(1, 4)));
  EXPECT_FALSE(is_integral_lattice(E, E.different.inverse(), 1));
  EXPECT_FALSE(is_integral_lattice(E, FactoredIdeal{}, Rational(1, 5)));  // odd split pole
  EXPECT_TRUE(is_integral_lattice(E, parse_ideal(E, "5s"), Rational(1, 5)));

  std::mt19937_64 rng(5);
  for (const std::int64_t d : {-1, -2, -3, -5, -6, -7, -15, -23}) {
    const ImQuadField E2 = make_field(d);
    for (int it = 0; it < 60; ++it) {
      const FactoredIdeal I = oracle::random_fractional(E2, rng, {2, 3, 5, 7}, 2);
      const Rational a = frac(static_cast<long>(1 + rng() % 12), static_cast<long>(1 + rng() % 12));
      EXPECT_EQ(is_integral_lattice(E2, I, a), is_integral(gram(E2, I, a))) << d << " " << format_ideal(I) << " " << a;
    }
  }
}

TEST(Lattice, DualFormula) {
  const ImQuadField E = make_field(-1);
  EXPECT_EQ(format_ideal(dual_lattice(E, FactoredIdeal{}, 1)), "2r^-2");
  EXPECT_EQ(dual_lattice(E, FactoredIdeal{}, 1), E.different.inverse());
  EXPECT_EQ(gram_dual(E, FactoredIdeal{}, 1), dual_lattice(E, FactoredIdeal{}, 1));
}

TEST(Lattice, DualOfDualAndGramDual) {
  std::mt19937_64 rng(23);
  for (const std::int64_t d : {-1, -2, -3, -5, -6, -7, -15, -23}) {
    const ImQuadField E = make_field(d);
    for (int it = 0; it < 25; ++it) {
      const IdealLatticeLS L = oracle::random_integral_lattice(E, rng);
      const FactoredIdeal dual = dual_lattice(E, L);
      EXPECT_EQ(dual_lattice(E, dual, L.alpha), L.I);
      EXPECT_EQ(gram_dual(E, L.I, L.alpha), dual) << format_lattice(L);
      // an integral lattice sits inside its dual
      EXPECT_TRUE(divides(dual, L.I));
    }
  }
}

TEST(Lattice, MakeLatticeValidates) {
  const ImQuadField E = make_field(-1);
  EXPECT_THROW(make_lattice(E, FactoredIdeal{}, 0, FactoredIdeal{}), ValidationError);
  // J must contain I* = 2r^-2
  EXPECT_THROW(make_lattice(E, FactoredIdeal{}, 1, FactoredIdeal{}), ValidationError);
  const auto L = make_lattice(E, FactoredIdeal{}, 1, parse_ideal(E, "2r^-3"));
  EXPECT_EQ(format_ideal(level_ideal(E, L)), "2r");
}

TEST(Lattice, LevelIdealIsIntegral) {
  std::mt19937_64 rng(3);
  for (const std::int64_t d : {-1, -3, -5, -15}) {
    const ImQuadField E = make_field(d);
    for (int it = 0; it < 40; ++it) {
      const auto L = oracle::random_integral_lattice(E, rng);
      const auto IB = level_ideal(E, L);
      EXPECT_TRUE(IB.is_integral());
      EXPECT_EQ(IB, dual_lattice(E, L) / L.level_J);
    }
  }
}

TEST(Lattice, ScaleExamples) {
  const ImQuadField E = make_field(-1);
  const auto L = make_lattice(E, FactoredIdeal{}, 1, E.different.inverse());
  EXPECT_EQ(scale(E, parse_element(E, "1"), L), L);

  const FieldElement e = parse_element(E, "1+w");
  const auto S = scale(E, e, L);
  EXPECT_EQ(format_ideal(S.I), "2r");
  EXPECT_EQ(S.alpha, Rational(1, 2));
  EXPECT_EQ(S.level_J, parse_ideal(E, "2r") * L.level_J);
  EXPECT_EQ(level_ideal(E, S), level_ideal(E, L));
  EXPECT_THROW(scale(E, parse_element(E, "0"), L), ValidationError);
}

TEST(Lattice, ScalingCommutesWithDuals) {
  std::mt19937_64 rng(31);
  for (const std::int64_t d : {-1, -2, -3, -5, -7, -23}) {
    const ImQuadField E = make_field(d);
    for (int it = 0; it < 30; ++it) {
      const auto L = oracle::random_integral_lattice(E, rng);
      FieldElement e = oracle::random_element(E, rng, 4);
      if (e.is_zero()) continue;
      const auto S = scale(E, e, L);
      // (eI)* = e·I*
      EXPECT_EQ(dual_lattice(E, S), factor_element(E, e) * dual_lattice(E, L));
      EXPECT_EQ(level_ideal(E, S), level_ideal(E, L));
      EXPECT_EQ(det(gram(E, S.I, S.alpha)), det(gram(E, L.I, L.alpha)));
      EXPECT_EQ(is_integral_lattice(E, S.I, S.alpha), is_integral_lattice(E, L.I, L.alpha));
    }
  }
}

TEST(Lattice, EquivalenceExamples) {
  const ImQuadField E = make_field(-1);
  const auto L = make_lattice(E, FactoredIdeal{}, 1, E.different.inverse());
  const auto self = equivalent(E, L, L);
  ASSERT_TRUE(self);
  EXPECT_EQ(*self, parse_element(E, "1"));

  const auto S = scale(E, parse_element(E, "2+w"), L);
  const auto found = equivalent(E, L, S);
  ASSERT_TRUE(found);
  EXPECT_EQ(scale(E, *found, L), S);

  const ImQuadField F = make_field(-5);
  const auto A = make_lattice(F, FactoredIdeal{}, 1, dual_lattice(F, FactoredIdeal{}, 1));
  const auto B = make_lattice(F, parse_ideal(F, "2r"), Rational(1, 2), dual_lattice(F, parse_ideal(F, "2r"), Rational(1, 2)));
  EXPECT_FALSE(equivalent(F, A, B));
  // different α sign is never equivalent
  const auto C = make_lattice(E, FactoredIdeal{}, -1, E.different.inverse());
  EXPECT_FALSE(equivalent(E, L, C));
}

TEST(Lattice, EquivalenceProperties) {
  std::mt19937_64 rng(41);
  for (const std::int64_t d : {-1, -3, -5, -7, -15}) {
    const ImQuadField E = make_field(d);
    for (int it = 0; it < 30; ++it) {
      const auto L1 = oracle::random_integral_lattice(E, rng);
      const auto L2 = oracle::random_integral_lattice(E, rng);
      EXPECT_TRUE(equivalent(E, L1, L1));
      const auto f = equivalent(E, L1, L2);
      const auto b = equivalent(E, L2, L1);
      EXPECT_EQ(f.has_value(), b.has_value()) << format_lattice(L1) << " " << format_lattice(L2);
      if (f) {
        EXPECT_EQ(scale(E, *f, L1), L2);
        EXPECT_EQ(L1.I.norm() / L2.I.norm(), L2.alpha / L1.alpha);
      }
      FieldElement e = oracle::random_element(E, rng, 3);
      if (e.is_zero()) continue;
      const auto S = scale(E, e, L1);
      const auto g = equivalent(E, L1, S);
      ASSERT_TRUE(g);
      EXPECT_EQ(scale(E, *g, L1), S);
    }
  }
}

TEST(Lattice, LevelFromBrauerOrder) {
  const ImQuadField E = make_field(-1);
  const FactoredIdeal I{};
  const Rational alpha(1, 2);
  const auto dual = dual_lattice(E, I, alpha);

  const auto trivial = level_from_brauer_order(E, I, alpha, FactoredIdeal{});
  EXPECT_EQ(trivial.level_J, dual);
  EXPECT_TRUE(level_ideal(E, trivial).is_unit());

  const auto three = level_from_brauer_order(E, I, alpha, parse_ideal(E, "(3)"));
  EXPECT_EQ(three.level_J, dual / parse_ideal(E, "(3)"));
  EXPECT_EQ(format_ideal(level_ideal(E, three)), "3i");

  const auto two = level_from_brauer_order(E, I, alpha, parse_ideal(E, "(1+w)"));
  EXPECT_EQ(abelian_invariants(level_ideal(E, two)), std::vector<Integer>{2});

  EXPECT_THROW(level_from_brauer_order(E, I, alpha, parse_ideal(E, "(1/3)")), ValidationError);
}

TEST(Lattice, LiteralRoundTrip) {
  const ImQuadField E = make_field(-1);
  const auto L = parse_lattice(E, "lat((1); alpha=1/2; J=2r^-1*3i^-1)");
  EXPECT_TRUE(L.I.is_unit());
  EXPECT_EQ(L.alpha, Rational(1, 2));
  EXPECT_EQ(format_lattice(L), "lat((1); alpha=1/2; J=2r^-1*3i^-1)");
  EXPECT_EQ(parse_lattice(E, "lat( 2r ;alpha=3 ; J=2r^-3*3i^-1 )"), make_lattice(E, parse_ideal(E, "2r"), 3, parse_ideal(E, "2r^-3*3i^-1")));

  std::mt19937_64 rng(17);
  for (const std::int64_t d : {-2, -3, -5, -23}) {
    const ImQuadField F = make_field(d);
    for (int it = 0; it < 30; ++it) {
      const auto R = oracle::random_integral_lattice(F, rng);
      EXPECT_EQ(parse_lattice(F, format_lattice(R)), R);
    }
  }
}

TEST(Lattice, LiteralErrors) {
  const ImQuadField E = make_field(-1);
  for (const char* bad : {"", "lat(", "lat((1); alpha=1)", "lat((1); alpha=0; J=2r^-2)", "lat((1); alpha=1/0; J=2r^-2)",
                          "lat((1); beta=1; J=2r^-2)", "lat((1); alpha=1; J=2q)", "lat((1); alpha=1; J=2r^-2) x",
                          "lat((1); alpha=1; J=(1))"}) {
    EXPECT_THROW(parse_lattice(E, bad), ValidationError) << bad;
  }
  try {
    parse_lattice(E, "lat((1); alpha=1; J=2q)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 21u);  // the tag
  }
}

TEST(Lattice, OracleSuitesSmall) {
  const auto dual = oracle::dual_suite(60);
  EXPECT_TRUE(dual.ok()) << (dual.failures.empty() ? "" : dual.failures.front());
  const auto sc = oracle::scaling_suite(60);
  EXPECT_TRUE(sc.ok()) << (sc.failures.empty() ? "" : sc.failures.front());
}
