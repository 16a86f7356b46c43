#include "kzmodp/sweep.hpp"

#include <future>
#include <istream>
#include <sstream>

#include "kzmodp/annihilator.hpp"
#include "kzmodp/derham.hpp"
#include "kzmodp/verma.hpp"

namespace kzmodp {

const std::vector<Triple>& standard_triples() {
  static const std::vector<Triple> triples{{5, 2, 3},  {7, 2, 3},  {7, 2, 5}, {7, 3, 4},
                                           {11, 3, 4}, {11, 5, 6}, {13, 3, 7}};
  return triples;
}

std::vector<Triple> parse_triples(std::istream& in) {
  std::vector<Triple> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first) || first[0] == '#') continue;
    ss.seekg(0);
    Triple t{};
    std::string extra;
    if (!(ss >> t[0] >> t[1] >> t[2]) || (ss >> extra)) {
      throw Error("line " + std::to_string(lineno) + ": expected three non-negative integers p q n");
    }
    out.push_back(t);
  }
  return out;
}

namespace {

struct TrialVerdict {
  std::size_t rank, ann_dim;
  bool span_ok, kernel_ok;
};

// Spectrum of d on span{Phi, Q_1..Q_n}, plus every x^{lp} lying in the kernel
// and decomposing over that span.
template <Field F>
bool kernel_checks(const KzParams& params, const DeRham<F>& dr) {
  const auto sp = dr.q_space_spectrum();
  if (sp.kernel_dim != params.ak() + 1 || sp.image_dim != params.expected_ann_dim()) return false;
  const F& K = dr.field();
  for (std::uint32_t lp = 0; lp <= params.degree(); lp += params.p) {
    const auto mono = UniPoly<F>::monomial(K, lp, K.one());
    if (!dr.d_twisted(dr.to_twisted_basis(mono)).is_zero()) return false;
    try {
      dr.decompose_in_Q(mono);
    } catch (const NotInCriterion&) {
      return false;
    }
  }
  return true;
}

template <Field F>
TrialVerdict run_trial(const KzParams& params, const Context<F>& ctx) {
  const auto ann = annihilator_basis(params, ctx);
  return {ann.solution_rank, ann.dim, ann.relations_span, kernel_checks(params, DeRham<F>(params, ctx))};
}

}  // namespace

SweepRow sweep_row(const Triple& t, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw Error("trials must be at least 1");
  SweepRow row;
  row.p = t[0];
  row.q = t[1];
  row.n = t[2];
  KzParams params;
  try {
    params = KzParams::derive(t[0], t[1], t[2]);
  } catch (const NotPrime&) {
    row.reason = "NotPrime";
    return row;
  } catch (const NotAdmissible&) {
    row.reason = "NotAdmissible";
    return row;
  }
  row.k = params.k;
  row.a = params.a;
  row.M = params.M;
  row.ak = params.ak();

  std::vector<std::size_t> ranks;
  std::vector<std::size_t> dims;
  std::size_t span = 0, kernel = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = trial_rng(seed, trial);
    with_specialization_field(params, [&](const auto& field) {
      const auto ctx = make_specialized(field, random_distinct_point(field, static_cast<int>(params.n), rng));
      const auto v = run_trial(params, ctx);
      ranks.push_back(v.rank);
      dims.push_back(v.ann_dim);
      if (v.span_ok) ++span;
      if (v.kernel_ok) ++kernel;
      return 0;
    });
  }
  row.rank_ok = majority_vote(ranks).first == params.ak();
  row.ann_dim_ok = majority_vote(dims).first == params.expected_ann_dim();
  row.span_ok = 2 * span > trials;
  row.kernel_ok = 2 * kernel > trials;
  row.verma_ok = kz_instance_check(params).first_holds;
  return row;
}

std::vector<SweepRow> run_sweep(const std::vector<Triple>& triples, std::size_t trials, std::uint64_t seed) {
  std::vector<std::future<SweepRow>> pending;
  pending.reserve(triples.size());
  for (const auto& t : triples) pending.push_back(std::async(std::launch::async, sweep_row, t, trials, seed));
  std::vector<SweepRow> rows;
  rows.reserve(triples.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

std::string sweep_tsv_header() {
  return "p\tq\tn\tk\ta\tM\tak\trank_ok\tann_dim_ok\tspan_ok\tkernel_ok\tverma_ok\treason\n";
}

std::string to_tsv(const SweepRow& row) {
  std::ostringstream out;
  auto b = [&](bool v) { return row.admissible() ? (v ? "true" : "false") : "-"; };
  out << row.p << '\t' << row.q << '\t' << row.n << '\t';
  if (row.admissible()) {
    out << row.k << '\t' << row.a << '\t' << row.M << '\t' << row.ak;
  } else {
    out << "-\t-\t-\t-";
  }
  out << '\t' << b(row.rank_ok) << '\t' << b(row.ann_dim_ok) << '\t' << b(row.span_ok) << '\t' << b(row.kernel_ok)
      << '\t' << b(row.verma_ok) << '\t' << row.reason << '\n';
  return out.str();
}

std::string to_tsv(const std::vector<SweepRow>& rows) {
  std::string out = sweep_tsv_header();
  for (const auto& r : rows) out += to_tsv(r);
  return out;
}

}  // namespace kzmodp
