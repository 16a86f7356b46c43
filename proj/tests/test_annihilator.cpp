#include <gtest/gtest.h>

#include "kzmodp/annihilator.hpp"
#include "oracles.hpp"

using namespace kzmodp;

namespace {

const KzParams kWorked = KzParams::derive(5, 2, 3);
const PrimeField kF5(5);

Context<PrimeField> worked_ctx() { return make_specialized(kF5, std::vector<long long>{0, 1, 2}); }

bool in_monomial_span(const UniPoly<PrimeField>& f, std::uint32_t p) {
  for (long d = 0; d <= f.degree(); ++d) {
    if (d % p != 0 && !f.coeff(static_cast<std::size_t>(d)).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST(Relations, WorkedExample) {
  const DeRham<PrimeField> dr(kWorked, worked_ctx());
  EXPECT_EQ(relation_sum(kWorked, kF5), (Covector<PrimeField>(3, kF5.one())));
  const auto r1 = relation_qi(dr, 1);
  EXPECT_EQ(r1, (Covector<PrimeField>{kF5.from_int(1), kF5.from_int(3), kF5.from_int(1)}));
  EXPECT_EQ(normalize_covector<PrimeField>({kF5.zero(), kF5.from_int(2), kF5.from_int(4)}),
            (Covector<PrimeField>{kF5.zero(), kF5.one(), kF5.from_int(2)}));
  EXPECT_THROW(relation_qi(dr, 4), IndexOutOfRange);
}

TEST(Relations, QiMatchesDerivativeOfQ) {
  for (const auto& [p, q, n] : oracle::standard_triples()) {
    const auto params = KzParams::derive(p, q, n);
    with_specialization_field(params, [&](const auto& field) {
      using F = std::decay_t<decltype(field)>;
      Rng rng(p * 7 + q);
      const DeRham<F> dr(params, make_specialized(field, random_distinct_point(field, static_cast<int>(n), rng)));
      for (int i = 1; i <= static_cast<int>(n); ++i) EXPECT_EQ(relation_qi(dr, i), dr.q_derivative_logform(i).c);
      return 0;
    });
  }
}

TEST(Relations, AnnihilateSymbolicSolutions) {
  for (const auto& [p, q, n] : {std::array<std::uint32_t, 3>{5, 2, 3}, {7, 2, 3}, {7, 3, 4}, {11, 3, 4}}) {
    const auto params = KzParams::derive(p, q, n);
    const auto ctx = make_symbolic(p, n);
    const DeRham<SymbolicField> dr(params, ctx);
    const auto sols = arithmetic_solutions(params, ctx);
    for (const auto& r : all_relations(dr)) {
      for (const auto& s : sols) EXPECT_TRUE(pairing(r, s.components).is_zero()) << p << "," << q << "," << n;
    }
  }
}

TEST(Annihilator, WorkedExample) {
  const auto r = annihilator_basis(kWorked, worked_ctx());
  EXPECT_EQ(r.dim, 2u);
  EXPECT_EQ(r.expected, 2u);
  EXPECT_EQ(r.solution_rank, 1u);
  EXPECT_TRUE(r.relations_span);
  EXPECT_TRUE(verify_span(kWorked, worked_ctx()));
  for (const auto& c : r.basis) {
    const auto first = std::find_if(c.begin(), c.end(), [](const Fp& x) { return !x.is_zero(); });
    ASSERT_NE(first, c.end());
    EXPECT_EQ(*first, kF5.one());
  }
}

TEST(Annihilator, BasisAgreesWithOracleSolve) {
  // A covector is in Ann exactly when it kills each solution vector.
  for (const auto& [p, q, n] : oracle::standard_triples()) {
    const auto params = KzParams::derive(p, q, n);
    if (p < 4 * params.degree()) continue;
    const PrimeField F(p);
    Rng rng(p * 31 + n);
    const auto ctx = make_specialized(F, random_distinct_point(F, static_cast<int>(n), rng));
    oracle::Vec z;
    for (const auto& x : ctx.z) z.push_back(x.value());
    oracle::Mat rows;
    for (std::uint32_t l = 1; l <= params.ak(); ++l) rows.push_back(oracle::solution(z, static_cast<int>(params.M), p, static_cast<int>(l)));
    const auto report = annihilator_basis(params, ctx);
    EXPECT_EQ(report.dim, n - oracle::minor_rank(rows, p));
    for (const auto& c : report.basis) {
      for (const auto& row : rows) {
        long long s = 0;
        for (std::size_t j = 0; j < n; ++j) s = oracle::mod(s + static_cast<long long>(c[j].value()) * row[j], p);
        EXPECT_EQ(s, 0);
      }
    }
  }
}

TEST(Annihilator, MajorityDimensionAcrossTriples) {
  for (const auto& [p, q, n] : oracle::standard_triples()) {
    const auto params = KzParams::derive(p, q, n);
    const auto r = annihilator_trials(params, 20, 7);
    EXPECT_EQ(r.majority_dim, params.expected_ann_dim()) << p << "," << q << "," << n;
    EXPECT_GE(r.agreeing, 18u);
    EXPECT_GE(r.span_count, 18u);
    EXPECT_EQ(r.dims.size(), 20u);
  }
  EXPECT_EQ(annihilator_trials(kWorked, 5, 1).expected, 2u);
  EXPECT_EQ(annihilator_trials(KzParams::derive(13, 3, 7), 3, 1).majority_dim, 5u);
}

TEST(Annihilator, RankDropIsReportedNotRaised) {
  // With ak = 2 forced, the l = 2 row reads the x^9 coefficient of a degree 5
  // log vector, which is zero; rank falls to 1 and dim exceeds expected.
  const auto params = KzParams::unchecked(5, 2, 3, 1, 2, 2);
  AnnReport<PrimeField> r;
  ASSERT_NO_THROW(r = annihilator_basis(params, worked_ctx()));
  EXPECT_EQ(r.solution_rank, 1u);
  EXPECT_EQ(r.expected, 1u);
  EXPECT_EQ(r.dim, 2u);
  EXPECT_GT(r.dim, r.expected);
  EXPECT_FALSE(r.relations_span);
}

TEST(Antiderivative, AllOnesGivesMasterPolynomial) {
  const auto ctx = worked_ctx();
  const DeRham<PrimeField> dr(kWorked, ctx);
  const auto res = antiderivative_criterion(kWorked, ctx, relation_sum(kWorked, kF5));
  ASSERT_TRUE(res.Q.has_value());
  // 1/M = 3 in F_5
  EXPECT_TRUE(in_monomial_span(*res.Q - dr.master().scaled(kF5.from_int(3)), 5));
  EXPECT_EQ(res.Q->derivative(), dr.master().derivative().scaled(kF5.from_int(3)));
}

TEST(Antiderivative, UnitCovectorFails) {
  const auto res = antiderivative_criterion(kWorked, worked_ctx(), {kF5.one(), kF5.zero(), kF5.zero()});
  EXPECT_FALSE(res.Q.has_value());
  EXPECT_EQ(res.failing_l, 1u);
}

TEST(Antiderivative, RelationQiRecoversQ) {
  for (const auto& [p, q, n] : oracle::standard_triples()) {
    const auto params = KzParams::derive(p, q, n);
    const PrimeField F(p);
    Rng rng(p * n + 5);
    const auto ctx = make_specialized(F, random_distinct_point(F, static_cast<int>(n), rng));
    const DeRham<PrimeField> dr(params, ctx);
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      const auto res = antiderivative_criterion(params, ctx, relation_qi(dr, i));
      ASSERT_TRUE(res.Q.has_value());
      const auto Qi = dr.from_twisted_basis(dr.q_poly_recursive(i).form);
      EXPECT_TRUE(in_monomial_span(*res.Q - Qi, p));
      EXPECT_EQ(res.Q->derivative(), Qi.derivative());
    }
  }
}

TEST(Antiderivative, CriterionMatchesAnnihilatorMembership) {
  for (const auto& [p, q, n] : oracle::standard_triples()) {
    const auto params = KzParams::derive(p, q, n);
    const PrimeField F(p);
    Rng rng(p + 101 * n);
    const auto ctx = make_specialized(F, random_distinct_point(F, static_cast<int>(n), rng));
    const auto sols = solution_matrix(params, ctx);
    const auto logv = log_vector(params, ctx);
    const auto ann = annihilator_basis(params, ctx);
    for (int t = 0; t < 40; ++t) {
      Covector<PrimeField> c(n, F.zero());
      if (t % 2 == 0) {
        for (const auto& b : ann.basis) {
          const auto s = F.random(rng);
          for (std::size_t j = 0; j < n; ++j) c[j] = c[j] + s * b[j];
        }
      } else {
        for (auto& x : c) x = F.random(rng);
      }
      bool member = true;
      for (const auto& v : sols.apply(c)) member = member && v.is_zero();
      const auto res = antiderivative_criterion(params, ctx, c);
      EXPECT_EQ(res.Q.has_value(), member);
      if (res.Q) {
        UniPoly<PrimeField> g(F);
        for (std::size_t j = 0; j < n; ++j) g += logv[j].scaled(c[j]);
        EXPECT_EQ(res.Q->derivative(), g);
      }
    }
  }
}
