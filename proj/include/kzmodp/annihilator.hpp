#ifndef KZMODP_ANNIHILATOR_HPP
#define KZMODP_ANNIHILATOR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kzmodp/derham.hpp"
#include "kzmodp/kz_system.hpp"
#include "kzmodp/matrix.hpp"

namespace kzmodp {

template <Field F>
using Covector = std::vector<typename F::Element>;

template <Field F>
struct AnnReport {
  std::vector<Covector<F>> basis;
  std::size_t dim = 0;
  std::size_t expected = 0;
  bool relations_span = false;
  // Rank of the specialized solution matrix.
  std::size_t solution_rank = 0;
};

// First nonzero entry scaled to 1.
template <Field F>
Covector<F> normalize_covector(Covector<F> c) {
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    const auto s = x.inv();
    for (auto& y : c) y = y * s;
    break;
  }
  return c;
}

template <class E>
E pairing(const std::vector<E>& c, const std::vector<E>& v) {
  E s = c.at(0) - c.at(0);
  for (std::size_t j = 0; j < c.size(); ++j) s = s + c[j] * v[j];
  return s;
}

// (1, ..., 1): the relation that comes from dPhi = M sum_j Phi/(x - z_j).
template <Field F>
Covector<F> relation_sum(const KzParams& params, const F& field) {
  return Covector<F>(params.n, field.one());
}

// Relation from dQ_i/dx, written directly as the coefficient of P_j:
//   j != i:  sum over compositions of M/(z_j - z_i)^{l_0} * weight
//   j == i: -sum over compositions of C_{i,l_0} * weight
template <Field F>
Covector<F> relation_qi(const DeRham<F>& dr, int i) {
  const F& K = dr.field();
  const std::size_t n = dr.n();
  if (i < 1 || static_cast<std::size_t>(i) > n) throw IndexOutOfRange("index must be in 1..n");
  const auto Mk = K.from_int(dr.params().M);
  Covector<F> c(n, K.zero());
  for_each_composition(static_cast<int>(dr.params().M), [&](const Composition& comp) {
    const auto w = dr.composition_weight(i, comp);
    const int l0 = comp.parts[0];
    for (std::size_t j = 0; j < n; ++j) {
      if (j + 1 == static_cast<std::size_t>(i)) {
        c[j] = c[j] - dr.c_coeff(i, l0) * w;
      } else {
        c[j] = c[j] + Mk * dr.inv_diff_pow(i, static_cast<int>(j) + 1, l0) * w;
      }
    }
    return true;
  });
  return c;
}

template <Field F>
std::vector<Covector<F>> all_relations(const DeRham<F>& dr) {
  std::vector<Covector<F>> rels{relation_sum(dr.params(), dr.field())};
  for (std::size_t i = 1; i <= dr.n(); ++i) rels.push_back(relation_qi(dr, static_cast<int>(i)));
  return rels;
}

// The relations span exactly the annihilator at this specialization: they
// pair to zero with every solution and both spaces have dimension (q-a)k+1.
template <Field F>
bool verify_span(const KzParams& params, const Context<F>& ctx) {
  const DeRham<F> dr(params, ctx);
  const auto sols = solution_matrix(params, ctx);
  const auto rels = all_relations(dr);
  for (const auto& r : rels) {
    for (const auto& v : sols.apply(r)) {
      if (!v.is_zero()) return false;
    }
  }
  const std::size_t expected = params.expected_ann_dim();
  const std::size_t ann_dim = ctx.z.size() - sols.rank();
  return span_rank(ctx.field, rels, ctx.z.size()) == expected && ann_dim == expected;
}

// Kernel of the ak x n solution matrix at a specialization.
template <Field F>
AnnReport<F> annihilator_basis(const KzParams& params, const Context<F>& ctx) {
  AnnReport<F> r;
  const auto m = solution_matrix(params, ctx);
  for (auto& v : m.kernel()) r.basis.push_back(normalize_covector<F>(std::move(v)));
  r.solution_rank = m.rank();
  r.dim = r.basis.size();
  r.expected = params.expected_ann_dim();
  r.relations_span = verify_span(params, ctx);
  return r;
}

template <Field F>
struct AntiderivativeResult {
  std::optional<UniPoly<F>> Q;
  // First l in 1..ak whose x^{lp-1} coefficient is nonzero; 0 on success.
  std::uint32_t failing_l = 0;
};

// Q with dQ/dx = sum_j c_j Phi/(x - z_j), when it exists. The x^{lp}
// coefficients of Q, constant term included, are set to zero.
template <Field F>
AntiderivativeResult<F> antiderivative_criterion(const KzParams& params, const Context<F>& ctx, const Covector<F>& c) {
  const F& K = ctx.field;
  const auto logv = log_vector(params, ctx);
  UniPoly<F> g(K);
  for (std::size_t j = 0; j < c.size(); ++j) g += logv[j].scaled(c[j]);
  AntiderivativeResult<F> out;
  for (std::uint32_t l = 1; l <= params.ak(); ++l) {
    if (!g.coeff(static_cast<std::size_t>(l) * params.p - 1).is_zero()) {
      out.failing_l = l;
      return out;
    }
  }
  std::vector<typename F::Element> q(static_cast<std::size_t>(g.degree() + 2), K.zero());
  for (long d = 0; d <= g.degree(); ++d) {
    const auto& gd = g.coeff(static_cast<std::size_t>(d));
    if (gd.is_zero()) continue;
    const auto denom = K.from_int(d + 1);
    if (denom.is_zero()) throw std::logic_error("criterion holds but an x^{lp-1} coefficient survived");
    q[static_cast<std::size_t>(d + 1)] = gd * denom.inv();
  }
  out.Q = UniPoly<F>(K, std::move(q));
  return out;
}

struct AnnTrialReport {
  std::vector<std::size_t> dims;
  std::vector<bool> spans;
  std::size_t majority_dim = 0;
  std::size_t agreeing = 0;
  // Trials where the explicit relations span the annihilator.
  std::size_t span_count = 0;
  std::size_t expected = 0;
  std::string field;
};

// annihilator_basis at `trials` seeded random specializations.
AnnTrialReport annihilator_trials(const KzParams& params, std::size_t trials, std::uint64_t seed);

}  // namespace kzmodp

#endif  // KZMODP_ANNIHILATOR_HPP
