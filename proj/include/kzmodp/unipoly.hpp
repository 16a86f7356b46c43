#ifndef KZMODP_UNIPOLY_HPP
#define KZMODP_UNIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "kzmodp/errors.hpp"
#include "kzmodp/field.hpp"

namespace kzmodp {

// Dense univariate polynomial over a field, lowest degree first. The highest
// stored coefficient is nonzero; the zero polynomial stores nothing.
template <Field F>
class UniPoly {
 public:
  using Element = typename F::Element;

  explicit UniPoly(F field) : field_(std::move(field)) {}
  UniPoly(F field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static UniPoly constant(const F& field, Element c) { return UniPoly(field, {std::move(c)}); }
  static UniPoly monomial(const F& field, std::size_t degree, Element c) {
    std::vector<Element> v(degree + 1, field.zero());
    v[degree] = std::move(c);
    return UniPoly(field, std::move(v));
  }
  static UniPoly x(const F& field) { return monomial(field, 1, field.one()); }
  // x - c
  static UniPoly linear_root(const F& field, const Element& c) {
    return UniPoly(field, {-c, field.one()});
  }

  const F& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Element>& coefficients() const { return c_; }
  Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  Element leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  void set_coeff(std::size_t i, Element v) {
    if (i >= c_.size()) c_.resize(i + 1, field_.zero());
    c_[i] = std::move(v);
    trim();
  }

  Element operator()(const Element& at) const {
    Element r = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
    return r;
  }

  UniPoly operator-() const {
    UniPoly r(field_);
    r.c_.reserve(c_.size());
    for (const auto& a : c_) r.c_.push_back(-a);
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<Element> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(a.field_, std::move(r));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  UniPoly scaled(const Element& s) const {
    if (s.is_zero()) return UniPoly(field_);
    std::vector<Element> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(a * s);
    return UniPoly(field_, std::move(r));
  }

  // Multiply by x^k.
  UniPoly shifted_up(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Element> r(k, field_.zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return UniPoly(field_, std::move(r));
  }

  UniPoly pow(unsigned e) const {
    UniPoly r = constant(field_, field_.one());
    UniPoly b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  // Formal derivative; in characteristic p the x^{kp} terms vanish.
  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly(field_);
    std::vector<Element> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * field_.from_int(static_cast<long long>(i)));
    return UniPoly(field_, std::move(r));
  }

  // Long division; the divisor's leading coefficient must be invertible.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw DivisionByZero();
    UniPoly rem = f;
    if (f.degree() < g.degree()) return {UniPoly(f.field_), rem};
    const Element lead_inv = g.leading().inv();
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    std::vector<Element> quo(static_cast<std::size_t>(f.degree() - g.degree()) + 1, f.field_.zero());
    for (long k = f.degree() - g.degree(); k >= 0; --k) {
      const std::size_t top = static_cast<std::size_t>(k) + dg;
      if (top >= rem.c_.size()) continue;
      Element t = rem.c_[top] * lead_inv;
      if (t.is_zero()) continue;
      quo[static_cast<std::size_t>(k)] = t;
      for (std::size_t j = 0; j <= dg; ++j) {
        rem.c_[static_cast<std::size_t>(k) + j] = rem.c_[static_cast<std::size_t>(k) + j] - t * g.c_[j];
      }
    }
    rem.trim();
    return {UniPoly(f.field_, std::move(quo)), rem};
  }

  // Throws InexactDivision unless g divides f.
  friend UniPoly div_exact(const UniPoly& f, const UniPoly& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw InexactDivision();
    return q;
  }

  friend UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inv());
  }

  // g(x) = f(x + c), by repeated synthetic division.
  UniPoly taylor_shift(const Element& c) const {
    std::vector<Element> a = c_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = n - 1; j > i; --j) a[j - 1] = a[j - 1] + c * a[j];
    }
    return UniPoly(field_, std::move(a));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const UniPoly& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (long i = f.degree(); i >= 0; --i) {
      const auto& a = f.c_[static_cast<std::size_t>(i)];
      if (a.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << a << ")";
      if (i > 0) os << "*x^" << i;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  F field_;
  std::vector<Element> c_;
};

}  // namespace kzmodp

#endif  // KZMODP_UNIPOLY_HPP
