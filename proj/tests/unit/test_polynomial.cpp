#include <gtest/gtest.h>

#include <random>

#include "rescoh/error.hpp"
#include "rescoh/polynomial.hpp"

using namespace rescoh;

namespace {

const RationalFunction s = RationalFunction::variable();

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 17);
  return make_rational(num(rng), den(rng));
}

RationalFunction random_linear_factor(std::mt19937& rng) {
  return s - RationalFunction(random_rational(rng));
}

}  // namespace

TEST(Polynomial, TrimsAndReportsDegree) {
  Polynomial p({Rational(1), Rational(0), Rational(0)});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_TRUE((Polynomial::x() - Polynomial::x()).is_zero());
}

TEST(Polynomial, DivmodReconstructs) {
  const Polynomial a({Rational(3), Rational(-2), Rational(0), Rational(5)});
  const Polynomial b({make_rational(1, 2), Rational(1)});
  const auto [q, r] = Polynomial::divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
}

TEST(Polynomial, GcdIsMonic) {
  const Polynomial f = Polynomial::linear(-1, 1) * Polynomial::linear(2, 1);
  const Polynomial g = Polynomial::linear(-1, 1) * Polynomial::linear(3, 5);
  EXPECT_EQ(Polynomial::gcd(f, g), Polynomial::linear(-1, 1));
}

TEST(Polynomial, Formatting) {
  const Polynomial p({make_rational(-1, 2), Rational(0), Rational(2)});
  EXPECT_EQ(p.to_string("s"), "2*s^2 - 1/2");
  EXPECT_EQ(Polynomial().to_string(), "0");
}

TEST(Polynomial, RootMultiplicity) {
  const Polynomial f = Polynomial::linear(make_rational(-1, 2), 1);
  EXPECT_EQ((f * f * Polynomial::linear(3, 1)).root_multiplicity(make_rational(1, 2)), 2);
  EXPECT_EQ(f.root_multiplicity(1), 0);
}

TEST(RationalFunction, ReducesToLowestTerms) {
  const RationalFunction f = (s * s - RationalFunction(1)) / (s - RationalFunction(1));
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f, s + RationalFunction(1));
}

TEST(RationalFunction, DenominatorIsMonic) {
  const RationalFunction f = RationalFunction(1) / (RationalFunction(2) * s + RationalFunction(1));
  EXPECT_EQ(f.denominator().leading(), 1);
  EXPECT_EQ(f.numerator(), Polynomial(make_rational(1, 2)));
}

TEST(RationalFunction, DivisionByZeroThrows) {
  EXPECT_THROW(s / RationalFunction(0), DomainError);
}

TEST(RationalFunction, EvaluateAtPoleThrows) {
  const RationalFunction f = RationalFunction(1) / s;
  EXPECT_THROW(f.evaluate(0), DomainError);
  EXPECT_EQ(f.evaluate(make_rational(1, 3)), 3);
}

TEST(RationalFunction, FieldAxiomsAtRandomPoints) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const RationalFunction f = random_linear_factor(rng) / random_linear_factor(rng);
    const RationalFunction g = random_linear_factor(rng) * random_linear_factor(rng);
    const Rational x = random_rational(rng);
    Rational fx, gx;
    try {
      fx = f.evaluate(x);
      gx = g.evaluate(x);
    } catch (const DomainError&) {
      continue;
    }
    EXPECT_EQ((f + g).evaluate(x), fx + gx);
    EXPECT_EQ((f * g).evaluate(x), fx * gx);
    EXPECT_EQ((f - g).evaluate(x), fx - gx);
  }
}

TEST(VanishingOrder, Basic) {
  const Rational half = make_rational(1, 2);
  const RationalFunction c1 = (RationalFunction(half) - s) / (RationalFunction(half) + s);
  EXPECT_EQ(vanishing_order(c1, half), 1);
  EXPECT_EQ(vanishing_order(RationalFunction(1), half), 0);
  EXPECT_EQ(vanishing_order(RationalFunction(1) / (s - RationalFunction(half)), half), -1);
  EXPECT_THROW(vanishing_order(RationalFunction(0), half), DomainError);
}

TEST(VanishingOrder, AdditiveUnderProducts) {
  std::mt19937 rng(2024);
  const Rational point = make_rational(1, 2);
  std::uniform_int_distribution<int> pick(0, 3);
  auto random_function = [&] {
    RationalFunction f(random_rational(rng) == 0 ? Rational(1) : random_rational(rng));
    for (int k = pick(rng); k > 0; --k) f *= s - RationalFunction(point);
    for (int k = pick(rng); k > 0; --k) f /= s - RationalFunction(point);
    f *= random_linear_factor(rng);
    return f;
  };
  int checked = 0;
  while (checked < 100) {
    const RationalFunction f = random_function();
    const RationalFunction g = random_function();
    if (f.is_zero() || g.is_zero()) continue;
    EXPECT_EQ(vanishing_order(f * g, point), vanishing_order(f, point) + vanishing_order(g, point));
    ++checked;
  }
}
