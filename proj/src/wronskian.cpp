#include "kzmodp/wronskian.hpp"

#include <stdexcept>

namespace kzmodp {

UPoly wronskian(const UPoly& g, const UPoly& h) { return g * h.derivative() - g.derivative() * h; }

DescentResult descend(const UPoly& g0, const UPoly& h0) {
  if (g0.is_zero() && h0.is_zero()) throw Error("descend needs a nonzero polynomial");
  if (!wronskian(g0, h0).is_zero()) throw NonzeroWronskian();
  const std::uint32_t p = g0.field().modulus();
  UPoly g = g0, h = h0;
  const long cap = std::max(g.degree(), 0L) + std::max(h.degree(), 0L) + 2;
  for (long step = 0; !g.is_zero() && !h.is_zero(); ++step) {
    if (step > cap) throw std::logic_error("descent did not terminate");
    const long l = g.degree(), m = h.degree();
    if ((l - m) % static_cast<long>(p) != 0) throw std::logic_error("zero Wronskian but p does not divide l - m");
    if (l >= m) {
      g -= h.shifted_up(static_cast<std::size_t>(l - m)).scaled(g.leading() / h.leading());
    } else {
      h -= g.shifted_up(static_cast<std::size_t>(m - l)).scaled(h.leading() / g.leading());
    }
    if (!wronskian(g, h).is_zero()) throw std::logic_error("reduction step changed the Wronskian");
  }
  UPoly common = (g.is_zero() ? h : g).monic();
  DescentResult r{common, div_exact(g0, common), div_exact(h0, common)};
  if (!in_frobenius_image(r.top) || !in_frobenius_image(r.bottom)) {
    throw std::logic_error("descent quotients are not polynomials in t^p");
  }
  return r;
}

bool in_frobenius_image(const UPoly& f) {
  const std::uint32_t p = f.field().modulus();
  for (long i = 0; i <= f.degree(); ++i) {
    if (i % p != 0 && !f.coeff(static_cast<std::size_t>(i)).is_zero()) return false;
  }
  return true;
}

UPoly deflate(const UPoly& f) {
  if (!in_frobenius_image(f)) throw Error("polynomial is not in F_p[t^p]");
  const std::uint32_t p = f.field().modulus();
  std::vector<Fp> c;
  for (long i = 0; i <= f.degree(); i += p) c.push_back(f.coeff(static_cast<std::size_t>(i)));
  return UPoly(f.field(), std::move(c));
}

UPoly inflate(const UPoly& g) {
  const std::uint32_t p = g.field().modulus();
  UPoly out(g.field());
  for (long i = 0; i <= g.degree(); ++i) {
    if (!g.coeff(static_cast<std::size_t>(i)).is_zero()) {
      out.set_coeff(static_cast<std::size_t>(i) * p, g.coeff(static_cast<std::size_t>(i)));
    }
  }
  return out;
}

UniRatFunc<PrimeField> frobenius_decompose(const UniRatFunc<PrimeField>& f) {
  const UPoly& num = f.numerator();
  const UPoly& den = f.denominator();
  if (!wronskian(num, den).is_zero()) throw DerivativeNonzero();
  if (num.is_zero()) return UniRatFunc<PrimeField>(num, UPoly::constant(num.field(), num.field().one()));
  const DescentResult d = descend(num, den);
  return UniRatFunc<PrimeField>(deflate(d.top), deflate(d.bottom));
}

}  // namespace kzmodp
