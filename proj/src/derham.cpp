#include "kzmodp/derham.hpp"

namespace kzmodp {

void for_each_composition(int M, const std::function<bool(const Composition&)>& fn) {
  if (M < 1) throw Error("compositions need M >= 1");
  Composition c{{M}};
  for (;;) {
    if (!fn(c)) return;
    // Successor in descending lexicographic order: lower the rightmost part
    // above 1 and collect everything after it into one trailing part.
    std::size_t k = c.parts.size();
    while (k > 0 && c.parts[k - 1] == 1) --k;
    if (k == 0) return;
    int tail = 1;
    for (std::size_t t = k; t < c.parts.size(); ++t) tail += c.parts[t];
    c.parts.resize(k);
    --c.parts[k - 1];
    c.parts.push_back(tail);
  }
}

std::vector<Composition> compositions(int M) {
  std::vector<Composition> out;
  for_each_composition(M, [&](const Composition& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace kzmodp
