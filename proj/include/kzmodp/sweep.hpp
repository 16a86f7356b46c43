#ifndef KZMODP_SWEEP_HPP
#define KZMODP_SWEEP_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kzmodp/kz_system.hpp"

namespace kzmodp {

using Triple = std::array<std::uint64_t, 3>;

// One line of the sweep report. The verdicts are majority votes over trials;
// rows for inadmissible triples carry only (p, q, n) and a reason.
struct SweepRow {
  std::uint64_t p = 0, q = 0, n = 0;
  std::uint32_t k = 0, a = 0, M = 0, ak = 0;
  bool rank_ok = false;
  bool ann_dim_ok = false;
  bool span_ok = false;
  bool kernel_ok = false;
  bool verma_ok = false;
  std::string reason;

  bool admissible() const { return reason.empty(); }
  bool all_ok() const { return admissible() && rank_ok && ann_dim_ok && span_ok && kernel_ok && verma_ok; }
};

const std::vector<Triple>& standard_triples();

// Whitespace- or comma-separated "p q n" per line; blank lines and lines
// starting with '#' are skipped.
std::vector<Triple> parse_triples(std::istream& in);

SweepRow sweep_row(const Triple& t, std::size_t trials, std::uint64_t seed);
// Rows run concurrently; the result keeps input order.
std::vector<SweepRow> run_sweep(const std::vector<Triple>& triples, std::size_t trials, std::uint64_t seed);

std::string sweep_tsv_header();
std::string to_tsv(const SweepRow& row);
std::string to_tsv(const std::vector<SweepRow>& rows);

}  // namespace kzmodp

#endif  // KZMODP_SWEEP_HPP
