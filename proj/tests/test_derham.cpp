#include <gtest/gtest.h>

#include "kzmodp/derham.hpp"
#include "oracles.hpp"

using namespace kzmodp;

namespace {

struct Worked {
  KzParams params = KzParams::derive(5, 2, 3);
  PrimeField F{5};
  DeRham<PrimeField> dr{params, make_specialized(F, std::vector<long long>{0, 1, 2})};
  Fp operator()(long long v) const { return F.from_int(v); }
};

template <Field F>
TwistedForm<F> random_form(const DeRham<F>& dr, Rng& rng) {
  auto form = dr.zero_form();
  form.phi = dr.field().random(rng);
  for (auto& row : form.poles) {
    for (auto& c : row) c = dr.field().random(rng);
  }
  return form;
}

template <Field F>
UniPoly<F> random_poly(const F& field, long deg, Rng& rng) {
  std::vector<typename F::Element> c;
  for (long i = 0; i <= deg; ++i) c.push_back(field.random(rng));
  return UniPoly<F>(field, c);
}

oracle::Vec raw(const UniPoly<PrimeField>& f) {
  oracle::Vec v;
  for (const auto& c : f.coefficients()) v.push_back(c.value());
  return v;
}

}  // namespace

TEST(Compositions, OrderAndCount) {
  const auto two = compositions(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].parts, (std::vector<int>{2}));
  EXPECT_EQ(two[1].parts, (std::vector<int>{1, 1}));
  EXPECT_EQ(compositions(1).size(), 1u);
  EXPECT_EQ(compositions(1)[0].parts, (std::vector<int>{1}));
  for (int M = 1; M <= 10; ++M) {
    const auto all = compositions(M);
    EXPECT_EQ(all.size(), std::size_t{1} << (M - 1));
    for (std::size_t k = 0; k < all.size(); ++k) {
      EXPECT_EQ(all[k].sum(), M);
      for (int part : all[k].parts) EXPECT_GE(part, 1);
      if (k > 0) {
        EXPECT_TRUE(all[k - 1].parts > all[k].parts);
      }
    }
  }
  int visited = 0;
  for_each_composition(6, [&](const Composition&) { return ++visited < 5; });
  EXPECT_EQ(visited, 5);
}

TEST(Coefficients, WorkedExample) {
  Worked w;
  EXPECT_EQ(w.dr.c_coeff(1, 1), w(3));
  EXPECT_EQ(w.dr.c_coeff(1, 2), w(0));
  EXPECT_EQ(w.dr.d_log_form(1, 1).c, (std::vector<Fp>{w(0), w(2), w(1)}));
  for (int i = 1; i <= 3; ++i) {
    for (int m = 1; m <= 4; ++m) {
      Fp s = w.F.zero();
      for (const auto& c : w.dr.d_log_form(i, m).c) s = s + c;
      EXPECT_EQ(s, w.dr.c_coeff(i, m));
    }
  }
  EXPECT_THROW(w.dr.c_coeff(0, 1), IndexOutOfRange);
}

TEST(Coefficients, SinglePointHasEmptySums) {
  const auto params = KzParams::unchecked(5, 2, 1, 0, 1, 2);
  const DeRham<PrimeField> dr(params, make_specialized(PrimeField(5), std::vector<long long>{3}));
  EXPECT_TRUE(dr.c_coeff(1, 1).is_zero());
  EXPECT_TRUE(dr.c_coeff(1, 2).is_zero());
}

TEST(TwistedBasis, BasisElements) {
  Worked w;
  auto phi = w.dr.to_twisted_basis(w.dr.master());
  EXPECT_EQ(phi.phi, w.F.one());
  phi.phi = w.F.zero();
  EXPECT_TRUE(phi.is_zero());
  const auto p1 = w.dr.to_twisted_basis(w.dr.basis_poly(1, 1));
  auto expect = w.dr.zero_form();
  expect.pole(0, 1) = w.F.one();
  EXPECT_EQ(p1, expect);
  EXPECT_THROW(w.dr.to_twisted_basis(UniPoly<PrimeField>::monomial(w.F, 7, w.F.one())), DegreeTooHigh);
}

TEST(TwistedBasis, MatchesLinearSystemOracle) {
  for (const auto& [p, q, n] : oracle::standard_triples()) {
    const auto params = KzParams::derive(p, q, n);
    const PrimeField F(p);
    Rng rng(p * 13 + n);
    const auto ctx = make_specialized(F, random_distinct_point(F, static_cast<int>(n), rng));
    const DeRham<PrimeField> dr(params, ctx);
    oracle::Vec z;
    for (const auto& x : ctx.z) z.push_back(x.value());
    for (int t = 0; t < 5; ++t) {
      const auto f = random_poly(F, static_cast<long>(params.degree()), rng);
      const auto form = dr.to_twisted_basis(f);
      const auto [phi, poles] = oracle::partial_fractions(raw(f), z, static_cast<int>(params.M), p);
      EXPECT_EQ(form.phi.value(), phi);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t m = 1; m <= params.M; ++m) EXPECT_EQ(form.pole(j, m).value(), poles[j][m - 1]);
      }
    }
  }
}

TEST(TwistedBasis, Roundtrips) {
  for (const auto& [p, q, n] : oracle::standard_triples()) {
    const auto params = KzParams::derive(p, q, n);
    const PrimeField F(p);
    Rng rng(p + q + n);
    const DeRham<PrimeField> dr(params, make_specialized(F, random_distinct_point(F, static_cast<int>(n), rng)));
    for (int t = 0; t < 20; ++t) {
      const auto f = random_poly(F, static_cast<long>(rng() % (params.degree() + 1)), rng);
      EXPECT_EQ(dr.from_twisted_basis(dr.to_twisted_basis(f)), f);
      const auto form = random_form(dr, rng);
      EXPECT_EQ(dr.to_twisted_basis(dr.from_twisted_basis(form)), form);
    }
  }
}

TEST(DTwisted, WorkedFormulas) {
  Worked w;
  auto phi = w.dr.zero_form();
  phi.phi = w.F.one();
  auto expect = w.dr.zero_form();
  for (std::size_t j = 0; j < 3; ++j) expect.pole(j, 1) = w(2);
  EXPECT_EQ(w.dr.d_twisted(phi), expect);

  // d Phi/(x - z_i)^2 = -C_{i,1} Phi/(x - z_i)^2 - C_{i,2} Phi/(x - z_i) + D_{i,2}
  for (int i = 1; i <= 3; ++i) {
    auto top = w.dr.zero_form();
    top.pole(static_cast<std::size_t>(i - 1), 2) = w.F.one();
    auto e = w.dr.zero_form();
    e.pole(static_cast<std::size_t>(i - 1), 2) = -w.dr.c_coeff(i, 1);
    const auto d = w.dr.d_log_form(i, 2);
    for (std::size_t j = 0; j < 3; ++j) e.pole(j, 1) = d.c[j];
    e.pole(static_cast<std::size_t>(i - 1), 1) = -w.dr.c_coeff(i, 2);
    EXPECT_EQ(w.dr.d_twisted(top), e);
  }
}

TEST(DTwisted, AgreesWithPlainDerivative) {
  for (const auto& [p, q, n] : oracle::standard_triples()) {
    const auto params = KzParams::derive(p, q, n);
    const PrimeField F(p);
    Rng rng(p * 3 + n);
    const DeRham<PrimeField> dr(params, make_specialized(F, random_distinct_point(F, static_cast<int>(n), rng)));
    for (int t = 0; t < 30; ++t) {
      const auto form = random_form(dr, rng);
      const auto d = dr.d_twisted(form);
      EXPECT_TRUE(d.phi.is_zero());
      EXPECT_EQ(dr.from_twisted_basis(d), dr.from_twisted_basis(form).derivative());
    }
  }
}

TEST(DTwisted, AgreesOverRationals) {
  // The same formulas in characteristic zero with integer points.
  const auto params = KzParams::unchecked(7, 2, 3, 1, 1, 3);
  const RationalField Q;
  const auto ctx = make_specialized(Q, std::vector<Rational>{Q.from_int(-2), Q.from_int(1), Q.from_int(5)});
  const DeRham<RationalField> dr(params, ctx);
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    auto form = dr.zero_form();
    form.phi = Q.from_int(static_cast<long long>(rng() % 9) - 4);
    for (auto& row : form.poles) {
      for (auto& c : row) c = Q.from_int(static_cast<long long>(rng() % 9) - 4);
    }
    EXPECT_EQ(dr.from_twisted_basis(dr.d_twisted(form)), dr.from_twisted_basis(form).derivative());
    EXPECT_EQ(dr.to_twisted_basis(dr.from_twisted_basis(form)), form);
  }
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(dr.q_poly_recursive(i).form, dr.q_poly_closed(i).form);
    EXPECT_TRUE(dr.d_twisted(dr.q_poly_recursive(i).form).is_logarithmic());
  }
}

TEST(QPolynomial, WorkedExample) {
  Worked w;
  const auto rec = w.dr.q_poly_recursive(1);
  EXPECT_EQ(rec.A, (std::vector<Fp>{w(3)}));
  for (int i = 1; i <= 3; ++i) {
    auto expect = w.dr.zero_form();
    expect.pole(static_cast<std::size_t>(i - 1), 2) = w.F.one();
    expect.pole(static_cast<std::size_t>(i - 1), 1) = w.dr.c_coeff(i, 1);
    EXPECT_EQ(w.dr.q_poly_recursive(i).form, expect);
    EXPECT_EQ(w.dr.q_poly_closed(i).form, expect);
  }
  EXPECT_EQ(w.dr.q_derivative_logform(1).c, (std::vector<Fp>{w(1), w(3), w(1)}));
}

TEST(QPolynomial, RecursiveEqualsClosedSpecialized) {
  for (const auto& [p, q, n] : oracle::standard_triples()) {
    const auto params = KzParams::derive(p, q, n);
    with_specialization_field(params, [&](const auto& field) {
      Rng rng(p * 17 + n);
      using F = std::decay_t<decltype(field)>;
      for (int t = 0; t < 3; ++t) {
        const DeRham<F> dr(params, make_specialized(field, random_distinct_point(field, static_cast<int>(n), rng)));
        for (int i = 1; i <= static_cast<int>(n); ++i) {
          const auto rec = dr.q_poly_recursive(i);
          EXPECT_EQ(rec.form, dr.q_poly_closed(i).form) << p << "," << q << "," << n << " i=" << i;
          EXPECT_EQ(rec.A.size(), params.M - 1);
          EXPECT_EQ(rec.form.pole(static_cast<std::size_t>(i - 1), params.M), field.one());
          const auto d = dr.d_twisted(rec.form);
          EXPECT_TRUE(d.is_logarithmic());
          EXPECT_EQ(dr.logarithmic_part(d), dr.q_derivative_logform(i));
        }
      }
      return 0;
    });
  }
}

TEST(QPolynomial, RecursiveEqualsClosedSymbolic) {
  for (const auto& [p, q, n] : {std::array<std::uint32_t, 3>{5, 2, 3}, {7, 2, 3}, {7, 3, 4}, {11, 3, 4}}) {
    const auto params = KzParams::derive(p, q, n);
    const DeRham<SymbolicField> dr(params, make_symbolic(p, n));
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      EXPECT_EQ(dr.q_poly_recursive(i).form, dr.q_poly_closed(i).form);
    }
  }
}

TEST(QPolynomial, SinglePoleOrder) {
  // M = 1: Q_i = Phi/(x - z_i) and dQ_i = D_{i,1} - C_{i,1} Phi/(x - z_i).
  const auto params = KzParams::unchecked(7, 2, 3, 1, 1, 1);
  const PrimeField F(7);
  const DeRham<PrimeField> dr(params, make_specialized(F, std::vector<long long>{1, 3, 4}));
  for (int i = 1; i <= 3; ++i) {
    auto expect = dr.zero_form();
    expect.pole(static_cast<std::size_t>(i - 1), 1) = F.one();
    EXPECT_EQ(dr.q_poly_closed(i).form, expect);
    EXPECT_EQ(dr.q_poly_recursive(i).form, expect);
    auto lf = dr.d_log_form(i, 1);
    lf.c[static_cast<std::size_t>(i - 1)] = -dr.c_coeff(i, 1);
    EXPECT_EQ(dr.q_derivative_logform(i), lf);
  }
}

TEST(DecomposeInQ, Examples) {
  Worked w;
  const auto D1 = w.dr.decompose_in_Q(w.dr.from_twisted_basis(w.dr.q_poly_closed(1).form));
  EXPECT_EQ(D1, (std::vector<Fp>{w(0), w(1), w(0), w(0)}));
  EXPECT_EQ(w.dr.decompose_in_Q(w.dr.master()), (std::vector<Fp>{w(1), w(0), w(0), w(0)}));
  EXPECT_THROW(w.dr.decompose_in_Q(w.dr.basis_poly(2, 1)), NotInCriterion);
}

TEST(DecomposeInQ, PthPowerMonomials) {
  for (const auto& [p, q, n] : oracle::standard_triples()) {
    const auto params = KzParams::derive(p, q, n);
    const PrimeField F(p);
    Rng rng(p * n);
    const DeRham<PrimeField> dr(params, make_specialized(F, random_distinct_point(F, static_cast<int>(n), rng)));
    std::uint32_t count = 0;
    for (std::uint32_t lp = 0; lp <= params.degree(); lp += p, ++count) {
      const auto mono = UniPoly<PrimeField>::monomial(F, lp, F.one());
      EXPECT_TRUE(dr.d_twisted(dr.to_twisted_basis(mono)).is_zero());
      const auto D = dr.decompose_in_Q(mono);
      auto rebuilt = dr.master().scaled(D[0]);
      for (std::size_t j = 1; j <= n; ++j) {
        rebuilt += dr.from_twisted_basis(dr.q_poly_recursive(static_cast<int>(j)).form).scaled(D[j]);
      }
      EXPECT_EQ(rebuilt, mono);
    }
    EXPECT_EQ(count, params.ak() + 1);
  }
}

TEST(Spectrum, KernelAndImage) {
  Worked w;
  const auto s = w.dr.q_space_spectrum();
  EXPECT_EQ(s.kernel_dim, 2u);
  EXPECT_EQ(s.image_dim, 2u);
  for (const auto& [p, q, n] : oracle::standard_triples()) {
    const auto params = KzParams::derive(p, q, n);
    with_specialization_field(params, [&](const auto& field) {
      using F = std::decay_t<decltype(field)>;
      Rng rng(p + 2 * n);
      const DeRham<F> dr(params, make_specialized(field, random_distinct_point(field, static_cast<int>(n), rng)));
      const auto sp = dr.q_space_spectrum();
      EXPECT_EQ(sp.kernel_dim, params.ak() + 1);
      EXPECT_EQ(sp.image_dim, params.expected_ann_dim());
      EXPECT_EQ(sp.kernel_dim + sp.image_dim, n + 1);
      return 0;
    });
  }
}
