#include "kzmodp/kz_system.hpp"

#include <map>

namespace kzmodp {

KzParams KzParams::derive(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  if (!is_prime(p) || p >= (1ULL << 31)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
  if (!is_prime(q) || q >= (1ULL << 31)) throw NotPrime("q = " + std::to_string(q) + " is not prime");
  if (n < 2) throw NotAdmissible("n must be of the form kq + 1 with k >= 1");
  if (p <= n) throw NotAdmissible("p <= n");
  if ((n - 1) % q != 0) throw NotAdmissible("q does not divide n - 1");
  if (p == q) throw NotAdmissible("p = q leaves no a with q | (ap - 1)");
  KzParams r;
  r.p = static_cast<std::uint32_t>(p);
  r.q = static_cast<std::uint32_t>(q);
  r.n = static_cast<std::uint32_t>(n);
  r.k = static_cast<std::uint32_t>((n - 1) / q);
  for (std::uint64_t a = 1; a < q; ++a) {
    if ((a * p - 1) % q == 0) {
      r.a = static_cast<std::uint32_t>(a);
      break;
    }
  }
  if (r.a == 0) throw NotAdmissible("no a in [1, q) with q | (ap - 1)");
  r.M = static_cast<std::uint32_t>((std::uint64_t{r.a} * p - 1) / q);
  // Consequences of the constraints above; q < n < p keeps 1/q defined mod p.
  if (r.M >= r.p || r.ak() >= r.n || r.q % r.p == 0) throw std::logic_error("derived parameters violate invariants");
  return r;
}

KzParams KzParams::unchecked(std::uint32_t p, std::uint32_t q, std::uint32_t n, std::uint32_t k, std::uint32_t a,
                             std::uint32_t M) {
  KzParams r;
  r.p = p;
  r.q = q;
  r.n = n;
  r.k = k;
  r.a = a;
  r.M = M;
  return r;
}

Context<PrimeField> make_specialized(const PrimeField& field, const std::vector<long long>& z) {
  std::vector<Fp> pts;
  pts.reserve(z.size());
  for (auto v : z) pts.push_back(field.from_int(v));
  return make_specialized<PrimeField>(field, std::move(pts));
}

Context<SymbolicField> make_symbolic(std::uint32_t p, std::uint32_t n) {
  SymbolicField field(PrimeField(p), static_cast<int>(n));
  Context<SymbolicField> ctx{field, {}, true};
  for (std::uint32_t i = 0; i < n; ++i) ctx.z.push_back(field.variable(static_cast<int>(i)));
  return ctx;
}

std::vector<RatFunc<PrimeField>> kz_apply(const KzParams& params, int i, const std::vector<RatFunc<PrimeField>>& I) {
  const int n = static_cast<int>(I.size());
  if (n == 0) return {};
  if (i < 1 || i > n) throw IndexOutOfRange("kz_apply index must be in 1..n");
  const PrimeField& base = I[0].base();
  if (params.q % base.modulus() == 0) throw CharacteristicClash();
  const SymbolicField field(base, I[0].nvars());
  const auto qinv = field.from_base(base.from_int(params.q).inv());

  std::vector<RatFunc<PrimeField>> out;
  out.reserve(I.size());
  for (const auto& c : I) out.push_back(c.derivative(i - 1));
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    const auto zi = SymbolicPoly::variable(base, field.nvars(), i - 1);
    const auto zj = SymbolicPoly::variable(base, field.nvars(), j - 1);
    const RatFunc<PrimeField> coupling =
        qinv * RatFunc<PrimeField>(SymbolicPoly::constant(base, field.nvars(), base.one()), zi - zj);
    const auto w = omega_apply(i, j, I);
    for (int k : {i, j}) {
      auto& slot = out[static_cast<std::size_t>(k - 1)];
      slot = slot - coupling * w[static_cast<std::size_t>(k - 1)];
    }
  }
  return out;
}

VerifyReport verify_solution(const KzParams& params, const std::vector<SymbolicPoly>& I) {
  VerifyReport report;
  const int n = static_cast<int>(I.size());
  if (n == 0) {
    report.sum_zero = true;
    return report;
  }
  const PrimeField base = I[0].field();
  if (params.q % base.modulus() == 0) throw CharacteristicClash();
  const Fp qinv = base.from_int(params.q).inv();
  const int nv = I[0].nvars();
  auto var = [&](int v) { return SymbolicPoly::variable(base, nv, v); };

  SymbolicPoly sum(base, nv);
  for (const auto& c : I) sum += c;
  report.sum_zero = sum.is_zero();

  for (int i = 0; i < n; ++i) {
    // Clearing denominators: prod_{j != i}(z_i - z_j) and the cofactors that
    // miss one of them.
    std::vector<SymbolicPoly> diff(static_cast<std::size_t>(n), SymbolicPoly(base, nv));
    for (int j = 0; j < n; ++j) {
      if (j != i) diff[static_cast<std::size_t>(j)] = var(i) - var(j);
    }
    auto cofactor = [&](int skip) {
      SymbolicPoly r = SymbolicPoly::constant(base, nv, base.one());
      for (int j = 0; j < n; ++j) {
        if (j != i && j != skip) r *= diff[static_cast<std::size_t>(j)];
      }
      return r;
    };
    const SymbolicPoly full = cofactor(-1);

    std::vector<SymbolicPoly> residual;
    residual.reserve(I.size());
    for (int k = 0; k < n; ++k) residual.push_back(full * I[static_cast<std::size_t>(k)].derivative(i));
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const SymbolicPoly cf = cofactor(j).scaled(qinv);
      // Omega_{ij} I touches coordinates i and j only.
      const SymbolicPoly delta = I[static_cast<std::size_t>(j)] - I[static_cast<std::size_t>(i)];
      const SymbolicPoly term = cf * delta;
      residual[static_cast<std::size_t>(i)] -= term;
      residual[static_cast<std::size_t>(j)] += term;
    }
    bool flat = true;
    for (const auto& r : residual) flat = flat && r.is_zero();
    report.flat.push_back(flat);
    report.residuals.push_back(std::move(residual));
  }
  return report;
}

std::vector<std::vector<SymbolicPoly>> symbolic_solutions(const KzParams& params) {
  const auto ctx = make_symbolic(params.p, params.n);
  std::vector<std::vector<SymbolicPoly>> out;
  for (const auto& s : arithmetic_solutions(params, ctx)) {
    std::vector<SymbolicPoly> comps;
    for (const auto& c : s.components) {
      auto poly = c.as_polynomial();
      if (!poly) throw std::logic_error("arithmetic solution component is not a polynomial");
      comps.push_back(std::move(*poly));
    }
    out.push_back(std::move(comps));
  }
  return out;
}

std::uint64_t minor_degree_bound(const KzParams& params) {
  std::uint64_t d = 0;
  for (std::uint64_t l = 1; l <= params.ak(); ++l) d += std::uint64_t{params.degree()} - l * params.p;
  return d;
}

int specialization_degree(const KzParams& params) {
  const std::uint64_t bound = std::max<std::uint64_t>(minor_degree_bound(params), 1);
  if (params.p >= 4 * bound) return 1;
  int e = 1;
  std::uint64_t size = params.p;
  while (size < 64 * bound) {
    size *= params.p;
    ++e;
  }
  return e;
}

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

std::pair<std::size_t, std::size_t> majority_vote(const std::vector<std::size_t>& values) {
  std::map<std::size_t, std::size_t> counts;
  for (auto v : values) ++counts[v];
  std::pair<std::size_t, std::size_t> best{0, 0};
  for (const auto& [v, c] : counts) {
    if (c >= best.second) best = {v, c};
  }
  return best;
}

RankReport solution_rank(const KzParams& params, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw Error("trials must be at least 1");
  RankReport report;
  report.expected = params.ak();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    report.ranks.push_back(with_specialization_field(params, [&](const auto& field) {
      auto ctx = make_specialized(field, random_distinct_point(field, static_cast<int>(params.n), rng));
      if (report.field.empty()) report.field = field.name();
      return solution_matrix(params, ctx).rank();
    }));
  }
  std::tie(report.majority, report.agreeing) = majority_vote(report.ranks);
  return report;
}

}  // namespace kzmodp
