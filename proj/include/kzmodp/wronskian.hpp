#ifndef KZMODP_WRONSKIAN_HPP
#define KZMODP_WRONSKIAN_HPP

#include "kzmodp/field.hpp"
#include "kzmodp/ratfunc.hpp"
#include "kzmodp/unipoly.hpp"

namespace kzmodp {

using UPoly = UniPoly<PrimeField>;

// g = a * common, h = b * common with a, b in F_p[t^p].
struct DescentResult {
  UPoly common;
  UPoly top;
  UPoly bottom;
};

// g h' - g' h
UPoly wronskian(const UPoly& g, const UPoly& h);

// Reduces (g, h) with zero Wronskian by leading-term elimination until one
// side vanishes; the survivor (made monic) is the common factor. Ties in
// degree reduce g. Throws NonzeroWronskian, or Error when both are zero.
DescentResult descend(const UPoly& g, const UPoly& h);

// True when every exponent with a nonzero coefficient is divisible by p.
bool in_frobenius_image(const UPoly& f);
// f(t) = g(t^p) -> g(s).
UPoly deflate(const UPoly& f);
// g(s) -> g(t^p).
UPoly inflate(const UPoly& g);

// Writes f in F_p(t) with df/dt = 0 as g(t^p); returns g(s). Throws
// DerivativeNonzero otherwise.
UniRatFunc<PrimeField> frobenius_decompose(const UniRatFunc<PrimeField>& f);

}  // namespace kzmodp

#endif  // KZMODP_WRONSKIAN_HPP
