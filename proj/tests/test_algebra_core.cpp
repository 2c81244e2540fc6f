#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "starprod/multivector.hpp"
#include "starprod/sampling.hpp"

using namespace starprod;

namespace {

ScalarH hb(int n = 1) { return ScalarH::hbar(n); }

}  // namespace

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Rational, ExactSqrtOnlyForSquares) {
  EXPECT_EQ(*exact_sqrt(make_rational(169, 4)), make_rational(13, 2));
  EXPECT_FALSE(exact_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(exact_sqrt(Rational(-4)).has_value());
}

TEST(ComplexQ, FieldArithmetic) {
  const ComplexQ a(Rational(1), Rational(2)), b(make_rational(1, 3), Rational(-1));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a + (-a), ComplexQ{});
  EXPECT_EQ(ComplexQ::i() * ComplexQ::i(), ComplexQ(Rational(-1)));
  EXPECT_EQ(i_power(3), -ComplexQ::i());
  EXPECT_EQ(a.conj(), ComplexQ(Rational(1), Rational(-2)));
}

TEST(ScalarH, LaurentArithmeticAndPrinting) {
  const ScalarH x = ScalarH(make_rational(3, 2)) + hb(2).scaled(ComplexQ(Rational(0), make_rational(1, 2)));
  EXPECT_EQ(x.str(), "1/2*i*hb^2 + 3/2");
  EXPECT_EQ(x.max_hbar_power(), 2);
  EXPECT_EQ(x.min_hbar_power(), 0);
  EXPECT_EQ((hb(-1) * hb(1)), ScalarH(1L));
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(x.classical_part(), ScalarH(make_rational(3, 2)));
}

TEST(ScalarH, DivisionByIHbar) {
  const ScalarH x = ScalarH::i_hbar() * ScalarH(Rational(5));
  EXPECT_EQ(x.divided_by_ihbar(), ScalarH(Rational(5)));
  EXPECT_THROW(ScalarH(1L).divided_by_ihbar(), DivisibilityError);
  EXPECT_THROW(hb(-1).classical_part(), DomainError);
  EXPECT_THROW(ScalarH(1L).divided_by_monomial(ScalarH(1L) + hb()), DomainError);
}

TEST(PhasePoly, DerivativesObeyLeibniz) {
  sampling::Rng rng(1);
  for (int k = 0; k < 50; ++k) {
    const PhasePoly f = sampling::random_poly(rng), g = sampling::random_poly(rng);
    for (int v = 0; v < 8; ++v) {
      const Var x = static_cast<Var>(v);
      EXPECT_EQ((f * g).partial(x), f.partial(x) * g + f * g.partial(x));
    }
  }
}

TEST(PhasePoly, RingLaws) {
  sampling::Rng rng(2);
  for (int k = 0; k < 50; ++k) {
    const PhasePoly f = sampling::random_poly(rng), g = sampling::random_poly(rng), h = sampling::random_poly(rng);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
  }
}

TEST(PhasePoly, SubstituteAndDegree) {
  const PhasePoly f = PhasePoly::q(1).pow(2) * PhasePoly::p(0);
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.substitute(Var::q1, PhasePoly(2L)), PhasePoly::p(0).scaled(ScalarH(4L)));
  EXPECT_EQ(f.str(), "q1^2*p0");
}

TEST(Blade, IndicesAndOrdering) {
  EXPECT_EQ(Blade::from_indices({0, 2, 3}).str(), "g0g2g3");
  EXPECT_EQ(Blade::pseudoscalar().grade(), 4);
  EXPECT_THROW(Blade::from_indices({1, 1}), DomainError);
  EXPECT_THROW(Blade::from_indices({4}), DomainError);
  EXPECT_EQ(all_blades().size(), 16u);
}

TEST(Grassmann, MatchesSignCountWhenMetricDropsOut) {
  // with disjoint blades every product is the wedge product
  for (Blade a : all_blades()) {
    for (Blade b : all_blades()) {
      if ((a.mask() & b.mask()) != 0) {
        EXPECT_TRUE(grassmann_mul(Multivector::blade(a), Multivector::blade(b)).is_zero());
        continue;
      }
      EXPECT_EQ(grassmann_mul(Multivector::blade(a), Multivector::blade(b)),
                oracle::blade_product(a, b, Metric::standard()));
    }
  }
}

TEST(Grassmann, GeneratorsAnticommute) {
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Multivector a = Multivector::gamma(mu), b = Multivector::gamma(nu);
      EXPECT_TRUE((grassmann_mul(a, b) + grassmann_mul(b, a)).is_zero());
    }
  }
}

TEST(Grassmann, DerivativesUndoWedge) {
  // d/dgamma_mu (gamma_mu ^ X) = X when X lacks gamma_mu
  for (Blade b : all_blades()) {
    for (int mu = 0; mu < 4; ++mu) {
      if (b.contains(mu)) continue;
      const Multivector x = Multivector::blade(b);
      EXPECT_EQ(grassmann_partial_left(grassmann_mul(Multivector::gamma(mu), x), mu), x);
      EXPECT_EQ(grassmann_partial_right(grassmann_mul(x, Multivector::gamma(mu)), mu), x);
    }
  }
  EXPECT_THROW(grassmann_partial_left(Multivector(1L), 4), DomainError);
}

TEST(Multivector, GradeProjectionPartitions) {
  sampling::Rng rng(3);
  for (int k = 0; k < 30; ++k) {
    const Multivector m = sampling::random_multivector(rng, {}, 5);
    Multivector sum;
    for (int n = 0; n <= 4; ++n) sum += grade_project(m, n);
    EXPECT_EQ(sum, m);
  }
  EXPECT_THROW(grade_project(Multivector(1L), 5), DomainError);
}

TEST(Multivector, HbarHelpers) {
  const Multivector m = Multivector::gamma(1).scaled(ScalarH::i_hbar()) + Multivector::q(0);
  EXPECT_EQ(hbar_set_zero(m), Multivector::q(0));
  EXPECT_THROW(divide_by_ihbar(m), DivisibilityError);
  EXPECT_EQ(divide_by_ihbar(m - Multivector::q(0)), Multivector::gamma(1));
}

TEST(Multivector, CanonicalText) {
  const Multivector m = Multivector::blade(Blade::from_indices({0, 1}), PhasePoly::q(1).scaled(ScalarH(make_rational(-1, 2)))) +
                        Multivector(ScalarH::i_hbar());
  EXPECT_EQ(m.str(), "i*hb - 1/2*q1*g0g1");
  EXPECT_EQ(Multivector().str(), "0");
}
