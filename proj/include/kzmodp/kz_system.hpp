#ifndef KZMODP_KZ_SYSTEM_HPP
#define KZMODP_KZ_SYSTEM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kzmodp/errors.hpp"
#include "kzmodp/ext_field.hpp"
#include "kzmodp/field.hpp"
#include "kzmodp/matrix.hpp"
#include "kzmodp/multipoly.hpp"
#include "kzmodp/ratfunc.hpp"
#include "kzmodp/unipoly.hpp"

namespace kzmodp {

// Arithmetic data of the KZ system: primes p, q; n = kq + 1 < p; a the unique
// integer in [1, q) with q | (ap - 1); M = (ap - 1) / q.
struct KzParams {
  std::uint32_t p = 0, q = 0, n = 0, k = 0, a = 0, M = 0;

  // Validates and derives (k, a, M). Throws NotPrime or NotAdmissible.
  static KzParams derive(std::uint64_t p, std::uint64_t q, std::uint64_t n);
  // No validation; for exercising degenerate shapes (n = 1, M = 1) directly.
  static KzParams unchecked(std::uint32_t p, std::uint32_t q, std::uint32_t n, std::uint32_t k, std::uint32_t a,
                            std::uint32_t M);

  // Number of arithmetic solutions, l = 1..ak.
  std::uint32_t ak() const { return a * k; }
  std::uint32_t degree() const { return M * n; }
  // n - ak = (q - a)k + 1
  std::uint32_t expected_ann_dim() const { return (q - a) * k + 1; }

  friend bool operator==(const KzParams&, const KzParams&) = default;
};

// Where the coordinates z_1..z_n live: either a concrete point with pairwise
// distinct coordinates, or the generators of F_p(z_1..z_n).
template <Field F>
struct Context {
  using Element = typename F::Element;
  F field;
  std::vector<Element> z;
  bool symbolic = false;

  int n() const { return static_cast<int>(z.size()); }
};

using SymbolicField = RatFuncField<PrimeField>;
using SymbolicPoly = MultiPoly<PrimeField>;

template <Field F>
Context<F> make_specialized(const F& field, std::vector<typename F::Element> z) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      if (z[i] == z[j]) throw InvalidPoint("specialization coordinates must be pairwise distinct");
    }
  }
  return Context<F>{field, std::move(z), false};
}

Context<PrimeField> make_specialized(const PrimeField& field, const std::vector<long long>& z);
Context<SymbolicField> make_symbolic(std::uint32_t p, std::uint32_t n);

// Phi(x) = prod_i (x - z_i)^M, monic of degree Mn.
template <Field F>
UniPoly<F> master_poly(const KzParams& params, const Context<F>& ctx) {
  UniPoly<F> phi = UniPoly<F>::constant(ctx.field, ctx.field.one());
  for (const auto& zi : ctx.z) phi *= UniPoly<F>::linear_root(ctx.field, zi).pow(params.M);
  return phi;
}

// (Phi/(x - z_1), ..., Phi/(x - z_n))
template <Field F>
std::vector<UniPoly<F>> log_vector(const KzParams& params, const Context<F>& ctx) {
  const UniPoly<F> phi = master_poly(params, ctx);
  std::vector<UniPoly<F>> out;
  out.reserve(ctx.z.size());
  for (const auto& zj : ctx.z) out.push_back(div_exact(phi, UniPoly<F>::linear_root(ctx.field, zj)));
  return out;
}

template <Field F>
struct SolutionVector {
  std::uint32_t l;
  std::vector<typename F::Element> components;
};

// P^{lp-1} for l = 1..ak: the x^{lp-1} coefficients of the log vector.
template <Field F>
std::vector<SolutionVector<F>> arithmetic_solutions(const KzParams& params, const Context<F>& ctx) {
  const auto logv = log_vector(params, ctx);
  std::vector<SolutionVector<F>> out;
  for (std::uint32_t l = 1; l <= params.ak(); ++l) {
    SolutionVector<F> s{l, {}};
    const std::size_t d = static_cast<std::size_t>(l) * params.p - 1;
    for (const auto& f : logv) s.components.push_back(f.coeff(d));
    out.push_back(std::move(s));
  }
  return out;
}

// Omega_{ij} v for 1-based i != j: (-v_i + v_j) at i, (v_i - v_j) at j.
template <class E>
std::vector<E> omega_apply(int i, int j, const std::vector<E>& v) {
  const int n = static_cast<int>(v.size());
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw IndexOutOfRange("Omega indices must be distinct in 1..n");
  std::vector<E> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x - x);
  const E& vi = v[static_cast<std::size_t>(i - 1)];
  const E& vj = v[static_cast<std::size_t>(j - 1)];
  r[static_cast<std::size_t>(i - 1)] = vj - vi;
  r[static_cast<std::size_t>(j - 1)] = vi - vj;
  return r;
}

// nabla_i I = dI/dz_i - (1/q) sum_{j != i} Omega_{ij} I / (z_i - z_j), i 1-based.
std::vector<RatFunc<PrimeField>> kz_apply(const KzParams& params, int i, const std::vector<RatFunc<PrimeField>>& I);

struct VerifyReport {
  // flat[i-1]: all residual components for nabla_i vanish identically.
  std::vector<bool> flat;
  bool sum_zero = false;
  // residuals[i-1][k]: k-th component of prod_{j != i}(z_i - z_j) * nabla_i I.
  std::vector<std::vector<SymbolicPoly>> residuals;

  bool all_flat() const {
    for (bool f : flat) {
      if (!f) return false;
    }
    return true;
  }
};

// Exact symbolic check of the KZ system for a vector of polynomials in z.
VerifyReport verify_solution(const KzParams& params, const std::vector<SymbolicPoly>& I);

// Symbolic arithmetic solutions as polynomials in z_1..z_n over F_p.
std::vector<std::vector<SymbolicPoly>> symbolic_solutions(const KzParams& params);

// Extension degree used for random specializations: 1 when p is large
// relative to the degree of the solution minors, otherwise the least e with
// p^e >= 64 * degree bound.
int specialization_degree(const KzParams& params);
// Sum over l of the degree of P^{lp-1}: bounds the degree of a maximal minor.
std::uint64_t minor_degree_bound(const KzParams& params);

// Independent stream per (seed, trial).
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

template <class F>
std::vector<typename F::Element> random_distinct_point(const F& field, int n, Rng& rng) {
  if (field.order() != 0 && field.order() < static_cast<std::uint64_t>(n)) throw InsufficientField();
  std::vector<typename F::Element> z;
  while (static_cast<int>(z.size()) < n) {
    auto c = field.random(rng);
    bool fresh = true;
    for (const auto& w : z) {
      if (w == c) {
        fresh = false;
        break;
      }
    }
    if (fresh) z.push_back(std::move(c));
  }
  return z;
}

// Calls fn with the field chosen by specialization_degree.
template <class Fn>
auto with_specialization_field(const KzParams& params, Fn&& fn) {
  const PrimeField base(params.p);
  const int e = specialization_degree(params);
  if (e == 1) return fn(base);
  return fn(ExtField(base, e));
}

template <Field F>
Matrix<F> solution_matrix(const KzParams& params, const Context<F>& ctx) {
  const auto sols = arithmetic_solutions(params, ctx);
  Matrix<F> m(ctx.field, sols.size(), ctx.z.size());
  for (std::size_t l = 0; l < sols.size(); ++l) {
    for (std::size_t j = 0; j < ctx.z.size(); ++j) m(l, j) = sols[l].components[j];
  }
  return m;
}

struct RankReport {
  std::vector<std::size_t> ranks;
  std::size_t majority = 0;
  // Trials whose rank equals the majority value.
  std::size_t agreeing = 0;
  std::size_t expected = 0;
  std::string field;
};

// Majority value (ties broken towards the larger value) and its count.
std::pair<std::size_t, std::size_t> majority_vote(const std::vector<std::size_t>& values);

RankReport solution_rank(const KzParams& params, std::size_t trials, std::uint64_t seed);

}  // namespace kzmodp

#endif  // KZMODP_KZ_SYSTEM_HPP
