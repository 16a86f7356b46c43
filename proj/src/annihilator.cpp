#include "kzmodp/annihilator.hpp"

namespace kzmodp {

AnnTrialReport annihilator_trials(const KzParams& params, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw Error("trials must be at least 1");
  AnnTrialReport report;
  report.expected = params.expected_ann_dim();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    with_specialization_field(params, [&](const auto& field) {
      const auto ctx = make_specialized(field, random_distinct_point(field, static_cast<int>(params.n), rng));
      if (report.field.empty()) report.field = field.name();
      const auto r = annihilator_basis(params, ctx);
      report.dims.push_back(r.dim);
      report.spans.push_back(r.relations_span);
      if (r.relations_span) ++report.span_count;
      return 0;
    });
  }
  std::tie(report.majority_dim, report.agreeing) = majority_vote(report.dims);
  return report;
}

}  // namespace kzmodp
