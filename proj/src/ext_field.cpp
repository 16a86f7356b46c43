#include "kzmodp/ext_field.hpp"

#include <limits>
#include <sstream>

namespace kzmodp {

namespace {

using Poly = UniPoly<PrimeField>;

Poly to_poly(const PrimeField& base, const std::vector<std::uint32_t>& c) {
  std::vector<Fp> v;
  v.reserve(c.size());
  for (auto x : c) v.emplace_back(x, base.modulus());
  return Poly(base, std::move(v));
}

std::vector<std::uint32_t> to_raw(const Poly& f, int size) {
  std::vector<std::uint32_t> r(static_cast<std::size_t>(size), 0);
  for (long i = 0; i <= f.degree(); ++i) r[static_cast<std::size_t>(i)] = f.coeff(static_cast<std::size_t>(i)).value();
  return r;
}

// base^e mod m
Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::constant(m.field(), m.field().one());
  base = divmod(base, m).second;
  while (e) {
    if (e & 1) r = divmod(r * base, m).second;
    e >>= 1;
    if (e) base = divmod(base * base, m).second;
  }
  return r;
}

}  // namespace

bool is_irreducible(const UniPoly<PrimeField>& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const PrimeField& base = f.field();
  const Poly m = f.monic();
  const Poly y = Poly::x(base);
  Poly frob = y;  // y^{p^i} mod m
  for (long i = 1; i <= f.degree() / 2; ++i) {
    frob = powmod(frob, base.modulus(), m);
    Poly g = gcd(m, frob - y);
    if (g.degree() != 0) return false;
  }
  return true;
}

ExtElem::ExtElem(std::shared_ptr<const detail::ExtData> ctx, std::vector<std::uint32_t> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  c_.resize(static_cast<std::size_t>(ctx_->degree), 0);
  for (auto& x : c_) x %= ctx_->p;
}

bool ExtElem::is_zero() const {
  for (auto x : c_) {
    if (x != 0) return false;
  }
  return true;
}

ExtElem ExtElem::operator-() const {
  std::vector<std::uint32_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] == 0 ? 0 : ctx_->p - c_[i];
  return ExtElem(ctx_, std::move(r));
}

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
  const std::uint32_t p = a.ctx_->p;
  std::vector<std::uint32_t> r(a.c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = std::uint64_t{a.c_[i]} + b.c_[i];
    r[i] = static_cast<std::uint32_t>(s >= p ? s - p : s);
  }
  return ExtElem(a.ctx_, std::move(r));
}

ExtElem operator-(const ExtElem& a, const ExtElem& b) { return a + (-b); }

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
  const auto& ctx = *a.ctx_;
  const std::uint64_t p = ctx.p;
  const std::size_t e = static_cast<std::size_t>(ctx.degree);
  std::vector<std::uint64_t> prod(2 * e - 1, 0);
  for (std::size_t i = 0; i < e; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
  }
  // Reduce with the monic modulus: y^e = -sum m_k y^k.
  for (std::size_t d = prod.size(); d-- > e;) {
    const std::uint64_t t = prod[d];
    if (t == 0) continue;
    prod[d] = 0;
    for (std::size_t k = 0; k < e; ++k) {
      prod[d - e + k] = (prod[d - e + k] + (p - t) * ctx.modulus[k]) % p;
    }
  }
  std::vector<std::uint32_t> r(e);
  for (std::size_t i = 0; i < e; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return ExtElem(a.ctx_, std::move(r));
}

ExtElem ExtElem::inv() const {
  if (is_zero()) throw DivisionByZero();
  const PrimeField base(ctx_->p);
  // Extended Euclid: s * a + t * m = 1.
  Poly r0 = to_poly(base, ctx_->modulus);
  Poly r1 = to_poly(base, c_);
  Poly s0(base), s1 = Poly::constant(base, base.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  Poly inv = s0.scaled(r0.leading().inv());
  return ExtElem(ctx_, to_raw(inv, ctx_->degree));
}

std::ostream& operator<<(std::ostream& os, const ExtElem& a) {
  os << "[";
  for (std::size_t i = 0; i < a.c_.size(); ++i) os << (i ? "," : "") << a.c_[i];
  return os << "]";
}

ExtField::ExtField(const PrimeField& base, int degree) : base_(base) {
  if (degree < 1) throw Error("extension degree must be positive");
  // Enumerate monic polynomials of the given degree in lexicographic order.
  const std::uint32_t p = base.modulus();
  std::vector<std::uint32_t> low(static_cast<std::size_t>(degree), 0);
  for (;;) {
    std::vector<std::uint32_t> m = low;
    m.push_back(1);
    if (is_irreducible(to_poly(base, m))) {
      data_ = std::make_shared<detail::ExtData>(detail::ExtData{p, degree, std::move(m)});
      return;
    }
    std::size_t k = 0;
    while (k < low.size() && ++low[k] == p) low[k++] = 0;
    if (k == low.size()) throw std::logic_error("no irreducible polynomial found");
  }
}

ExtField::ExtField(const PrimeField& base, const UniPoly<PrimeField>& modulus) : base_(base) {
  if (!is_irreducible(modulus)) throw NotIrreducible();
  const Poly m = modulus.monic();
  data_ = std::make_shared<detail::ExtData>(
      detail::ExtData{base.modulus(), static_cast<int>(m.degree()), to_raw(m, static_cast<int>(m.degree()) + 1)});
}

std::uint64_t ExtField::order() const {
  std::uint64_t r = 1;
  for (int i = 0; i < data_->degree; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / data_->p) return std::numeric_limits<std::uint64_t>::max();
    r *= data_->p;
  }
  return r;
}

UniPoly<PrimeField> ExtField::modulus() const { return to_poly(base_, data_->modulus); }

ExtElem ExtField::zero() const { return ExtElem(data_, {}); }
ExtElem ExtField::one() const { return ExtElem(data_, {1}); }
ExtElem ExtField::from_int(long long n) const { return ExtElem(data_, {base_.from_int(n).value()}); }
ExtElem ExtField::from_base(const Fp& a) const { return ExtElem(data_, {a.value()}); }
ExtElem ExtField::from_coefficients(std::vector<std::uint32_t> c) const {
  if (c.size() > static_cast<std::size_t>(data_->degree)) throw Error("too many extension coefficients");
  return ExtElem(data_, std::move(c));
}
ExtElem ExtField::generator() const {
  if (data_->degree == 1) return ExtElem(data_, {(data_->p - data_->modulus[0]) % data_->p});
  return ExtElem(data_, {0, 1});
}

ExtElem ExtField::random(Rng& rng) const {
  std::uniform_int_distribution<std::uint32_t> dist(0, data_->p - 1);
  std::vector<std::uint32_t> c(static_cast<std::size_t>(data_->degree));
  for (auto& x : c) x = dist(rng);
  return ExtElem(data_, std::move(c));
}

std::string ExtField::name() const {
  std::ostringstream os;
  os << "F_" << data_->p << "^" << data_->degree;
  return os.str();
}

}  // namespace kzmodp
