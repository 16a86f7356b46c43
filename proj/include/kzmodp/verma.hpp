#ifndef KZMODP_VERMA_HPP
#define KZMODP_VERMA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kzmodp/kz_system.hpp"

namespace kzmodp {

using BigInt = boost::multiprecision::cpp_int;

// Highest weight L, level K, and the scan box 1 <= l <= l_max, 1 <= m <= m_max.
struct VermaParams {
  BigInt L;
  BigInt K;
  std::uint64_t l_max = 1;
  std::uint64_t m_max = 1;
};

enum class Condition { R1, R2, R3 };

std::string to_string(Condition c);

// r1: L - l + 1 + (m - 1)(K + 2) = 0
// r2: L + l + 1 - m(K + 2) = 0
// r3: K + 2 = 0 (l, m unused)
struct ReducibilityWitness {
  Condition condition;
  std::uint64_t l = 0;
  std::uint64_t m = 0;

  friend bool operator==(const ReducibilityWitness&, const ReducibilityWitness&) = default;
};

// Value of the cited linear form at the witness; zero exactly when it holds.
BigInt evaluate_condition(const BigInt& L, const BigInt& K, Condition c, std::uint64_t l, std::uint64_t m);

// Every witness in the scan box, ordered by condition, then m, then l.
std::vector<ReducibilityWitness> reducibility(const VermaParams& params);

struct InstanceReport {
  // (L, K) = (1 - ap, q - 2) with l = 1, m = M + 1 under r1.
  BigInt first_L, first_K;
  std::uint64_t first_l = 1, first_m = 0;
  bool first_holds = false;

  // (L, K) = (n - nap - 2, q - 2); the remark's stated witness is r2 with
  // l = 1, m = Mn.
  BigInt second_L, second_K;
  std::uint64_t stated_l = 1, stated_m = 0;
  bool stated_holds = false;
  // r2 with l = 2n(ap - 1) + 1, m = Mn.
  std::uint64_t corrected_l = 0;
  bool corrected_holds = false;
  std::vector<ReducibilityWitness> second_witnesses;
  std::uint64_t scan_bound = 0;
};

// Default scan bound 4 n a p for both l and m.
std::uint64_t default_scan_bound(const KzParams& params);

InstanceReport kz_instance_check(const KzParams& params);
InstanceReport kz_instance_check(const KzParams& params, std::uint64_t scan_bound);

}  // namespace kzmodp

#endif  // KZMODP_VERMA_HPP
