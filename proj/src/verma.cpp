#include "kzmodp/verma.hpp"

namespace kzmodp {

std::string to_string(Condition c) {
  switch (c) {
    case Condition::R1:
      return "r1";
    case Condition::R2:
      return "r2";
    case Condition::R3:
      return "r3";
  }
  return "?";
}

BigInt evaluate_condition(const BigInt& L, const BigInt& K, Condition c, std::uint64_t l, std::uint64_t m) {
  const BigInt bl(l), bm(m);
  switch (c) {
    case Condition::R1:
      return L - bl + 1 + (bm - 1) * (K + 2);
    case Condition::R2:
      return L + bl + 1 - bm * (K + 2);
    case Condition::R3:
      return K + 2;
  }
  return BigInt(1);
}

std::vector<ReducibilityWitness> reducibility(const VermaParams& params) {
  if (params.l_max < 1 || params.m_max < 1) throw Error("scan bounds must be positive");
  std::vector<ReducibilityWitness> out;
  const BigInt shift = params.K + 2;
  // Each condition is linear in l with unit slope, so for fixed m there is at
  // most one l; solve for it instead of scanning.
  for (Condition c : {Condition::R1, Condition::R2}) {
    for (std::uint64_t m = 1; m <= params.m_max; ++m) {
      const BigInt l = (c == Condition::R1) ? params.L + 1 + (BigInt(m) - 1) * shift
                                            : BigInt(m) * shift - params.L - 1;
      if (l >= 1 && l <= params.l_max) {
        const auto lv = static_cast<std::uint64_t>(l);
        if (evaluate_condition(params.L, params.K, c, lv, m) != 0) throw std::logic_error("solved witness fails");
        out.push_back({c, lv, m});
      }
    }
  }
  if (shift == 0) out.push_back({Condition::R3, 0, 0});
  return out;
}

std::uint64_t default_scan_bound(const KzParams& params) {
  return 4ULL * params.n * params.a * params.p;
}

InstanceReport kz_instance_check(const KzParams& params) {
  return kz_instance_check(params, default_scan_bound(params));
}

InstanceReport kz_instance_check(const KzParams& params, std::uint64_t scan_bound) {
  InstanceReport r;
  const BigInt ap = BigInt(params.a) * params.p;
  const BigInt n(params.n);
  r.first_L = 1 - ap;
  r.first_K = BigInt(params.q) - 2;
  r.first_m = std::uint64_t{params.M} + 1;
  r.first_holds = evaluate_condition(r.first_L, r.first_K, Condition::R1, r.first_l, r.first_m) == 0;

  r.second_L = n - n * ap - 2;
  r.second_K = BigInt(params.q) - 2;
  r.stated_m = params.degree();
  r.stated_holds = evaluate_condition(r.second_L, r.second_K, Condition::R2, r.stated_l, r.stated_m) == 0;
  r.corrected_l = static_cast<std::uint64_t>(2 * n * (ap - 1) + 1);
  r.corrected_holds = evaluate_condition(r.second_L, r.second_K, Condition::R2, r.corrected_l, r.stated_m) == 0;
  r.scan_bound = scan_bound;
  r.second_witnesses = reducibility(VermaParams{r.second_L, r.second_K, scan_bound, scan_bound});
  return r;
}

}  // namespace kzmodp
