#include <gtest/gtest.h>

#include "kzmodp/multipoly.hpp"
#include "kzmodp/unipoly.hpp"
#include "oracles.hpp"

using namespace kzmodp;
using P5 = UniPoly<PrimeField>;

namespace {

P5 poly(const PrimeField& F, std::initializer_list<long long> c) {
  std::vector<Fp> v;
  for (auto x : c) v.push_back(F.from_int(x));
  return P5(F, v);
}

P5 random_poly(const PrimeField& F, int deg, Rng& rng) {
  std::vector<Fp> v;
  for (int i = 0; i <= deg; ++i) v.push_back(F.random(rng));
  return P5(F, v);
}

oracle::Vec raw(const P5& f) {
  oracle::Vec v;
  for (const auto& c : f.coefficients()) v.push_back(c.value());
  return v;
}

MultiPoly<PrimeField> random_multi(const PrimeField& F, int nvars, int terms, unsigned maxdeg, Rng& rng) {
  std::vector<MultiPoly<PrimeField>::Term> t;
  std::uniform_int_distribution<unsigned> e(0, maxdeg);
  for (int i = 0; i < terms; ++i) {
    std::vector<unsigned> ex;
    for (int v = 0; v < nvars; ++v) ex.push_back(e(rng));
    t.emplace_back(Monomial::from_exponents(ex), F.random(rng));
  }
  return MultiPoly<PrimeField>(F, nvars, t);
}

}  // namespace

TEST(UniPoly, DerivativeExamples) {
  const PrimeField F(5);
  EXPECT_TRUE(P5::monomial(F, 5, F.one()).derivative().is_zero());
  EXPECT_EQ(poly(F, {0, 3, 1}).derivative(), poly(F, {3, 2}));
}

TEST(UniPoly, LeibnizAndLinearity) {
  const PrimeField F(7);
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto f = random_poly(F, static_cast<int>(rng() % 12), rng);
    const auto g = random_poly(F, static_cast<int>(rng() % 12), rng);
    const auto c = F.random(rng);
    EXPECT_EQ((f * g).derivative(), f.derivative() * g + f * g.derivative());
    EXPECT_EQ((f + g.scaled(c)).derivative(), f.derivative() + g.derivative().scaled(c));
  }
}

TEST(UniPoly, ProductMatchesSchoolbookOracle) {
  const PrimeField F(11);
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_poly(F, static_cast<int>(rng() % 9), rng);
    const auto g = random_poly(F, static_cast<int>(rng() % 9), rng);
    auto expect = oracle::mul(raw(f), raw(g), 11);
    while (!expect.empty() && expect.back() == 0) expect.pop_back();
    EXPECT_EQ(raw(f * g), expect);
  }
}

TEST(UniPoly, ExactDivision) {
  const PrimeField F(5);
  EXPECT_EQ(div_exact(poly(F, {-1, 0, 1}), poly(F, {-1, 1})), poly(F, {1, 1}));
  EXPECT_THROW(div_exact(poly(F, {0, 0, 1}), poly(F, {-1, 1})), InexactDivision);
  // Phi / x for z = (0, 1, 2), M = 2
  const auto phi = poly(F, {0, 0, 4, 3, 3, 4, 1});
  EXPECT_EQ(div_exact(phi, P5::x(F)), poly(F, {0, 4, 3, 3, 4, 1}));
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_poly(F, static_cast<int>(rng() % 8), rng);
    auto g = random_poly(F, static_cast<int>(rng() % 5), rng);
    if (g.is_zero()) continue;
    EXPECT_EQ(div_exact(f * g, g) * g, f * g);
    const auto [q, r] = divmod(f, g);
    EXPECT_EQ(q * g + r, f);
    EXPECT_LT(r.degree(), g.degree() == 0 ? 0 : g.degree());
  }
}

TEST(UniPoly, TaylorShift) {
  const PrimeField F(5);
  EXPECT_EQ(poly(F, {0, 0, 1}).taylor_shift(F.one()), poly(F, {1, 2, 1}));
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_poly(F, static_cast<int>(rng() % 10), rng);
    const auto c = F.random(rng);
    EXPECT_EQ(f.taylor_shift(F.zero()), f);
    EXPECT_EQ(f.taylor_shift(c).taylor_shift(-c), f);
    const auto x = F.random(rng);
    EXPECT_EQ(f.taylor_shift(c)(x), f(x + c));
  }
}

TEST(UniPoly, GcdIsMonicCommonFactor) {
  const PrimeField F(7);
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    auto j = random_poly(F, 1 + static_cast<int>(rng() % 3), rng);
    if (j.is_zero()) continue;
    j = j.monic();
    const auto a = random_poly(F, static_cast<int>(rng() % 5), rng);
    const auto b = random_poly(F, static_cast<int>(rng() % 5), rng);
    if (a.is_zero() || b.is_zero()) continue;
    const auto g = gcd(a * j, b * j);
    EXPECT_EQ(g.leading(), F.one());
    EXPECT_TRUE(divmod(a * j, g).second.is_zero());
    EXPECT_TRUE(divmod(g, j).second.is_zero());
  }
}

TEST(MultiPoly, ProductAgreesWithPointwiseEvaluation) {
  const PrimeField F(7);
  Rng rng(8);
  for (int t = 0; t < 60; ++t) {
    const auto f = random_multi(F, 3, 5, 3, rng);
    const auto g = random_multi(F, 3, 5, 3, rng);
    const auto h = f * g;
    // Degrees stay below p in every variable, so agreement on F_7^3 is identity.
    for (int a = 0; a < 7; ++a) {
      for (int b = 0; b < 7; ++b) {
        for (int c = 0; c < 7; c += 3) {
          const std::vector<Fp> pt{F.from_int(a), F.from_int(b), F.from_int(c)};
          ASSERT_EQ(h.evaluate(pt), f.evaluate(pt) * g.evaluate(pt));
        }
      }
    }
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f + g) - g, f);
  }
}

TEST(MultiPoly, DerivativeRules) {
  const PrimeField F(5);
  Rng rng(1);
  const auto z0 = MultiPoly<PrimeField>::variable(F, 3, 0);
  EXPECT_TRUE(z0.pow(5).derivative(0).is_zero());
  for (int t = 0; t < 100; ++t) {
    const auto f = random_multi(F, 3, 4, 6, rng);
    const auto g = random_multi(F, 3, 4, 6, rng);
    for (int v = 0; v < 3; ++v) EXPECT_EQ((f * g).derivative(v), f.derivative(v) * g + f * g.derivative(v));
  }
}

TEST(MultiPoly, DivideByDifference) {
  const PrimeField F(11);
  Rng rng(6);
  const auto z0 = MultiPoly<PrimeField>::variable(F, 3, 0);
  const auto z2 = MultiPoly<PrimeField>::variable(F, 3, 2);
  for (int t = 0; t < 60; ++t) {
    const auto f = random_multi(F, 3, 6, 4, rng);
    const auto q = (f * (z0 - z2)).divide_by_difference(0, 2);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, f);
    // f(z0 = z2) != 0 means (z0 - z2) does not divide f.
    if (!f.identify(0, 2).is_zero()) {
      EXPECT_FALSE(f.divide_by_difference(0, 2).has_value());
    }
  }
}

TEST(MultiPoly, NoStoredZeros) {
  const PrimeField F(5);
  const auto z = MultiPoly<PrimeField>::variable(F, 2, 1);
  const auto f = z.scaled(F.from_int(3)) + z.scaled(F.from_int(2));
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.size(), 0u);
  EXPECT_THROW(Monomial::variable(0, 200) * Monomial::variable(0, 100), std::overflow_error);
}
