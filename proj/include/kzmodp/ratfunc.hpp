#ifndef KZMODP_RATFUNC_HPP
#define KZMODP_RATFUNC_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kzmodp/field.hpp"
#include "kzmodp/multipoly.hpp"
#include "kzmodp/unipoly.hpp"

namespace kzmodp {

// Index of the difference (z_a - z_b), a < b, among the n(n-1)/2 pairs.
inline std::size_t pair_index(int a, int b, int nvars) {
  // Row-major over the strict upper triangle.
  return static_cast<std::size_t>(a * (2 * nvars - a - 1) / 2 + (b - a - 1));
}

// Rational function in z_1..z_n stored as
//
//   num / (den * prod_{a<b} (z_a - z_b)^{e_ab})
//
// Denominators that come from the KZ setting are products of coordinate
// differences; those are kept factored and cancelled against the numerator
// exactly, which makes the representation canonical when den = 1. Any other
// denominator lands in `den`, which is made monic in its lexicographically
// leading term but is not reduced against the numerator. Equality always
// cross-multiplies, so it is exact in both cases.
template <Field F>
class RatFunc {
 public:
  using Poly = MultiPoly<F>;
  using Element = typename F::Element;

  explicit RatFunc(const Poly& num)
      : num_(num),
        den_(Poly::constant(num.field(), num.nvars(), num.field().one())),
        dexp_(pair_count(num.nvars()), 0) {}

  // num / den for an arbitrary nonzero den; difference factors of den are
  // pulled out into the factored part.
  RatFunc(const Poly& num, const Poly& den) : RatFunc(num) {
    if (den.is_zero()) throw DivisionByZero();
    Poly rest = den;
    for (int a = 0; a < nvars(); ++a) {
      for (int b = a + 1; b < nvars(); ++b) {
        while (!rest.is_constant()) {
          auto q = rest.divide_by_difference(a, b);
          if (!q) break;
          rest = std::move(*q);
          ++dexp_[pair_index(a, b, nvars())];
        }
      }
    }
    den_ = rest;
    normalize();
  }

  const Poly& numerator() const { return num_; }
  const Poly& general_denominator() const { return den_; }
  const std::vector<unsigned>& difference_exponents() const { return dexp_; }
  int nvars() const { return num_.nvars(); }
  const F& base() const { return num_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const {
    if (!den_.is_one()) return false;
    for (auto e : dexp_) {
      if (e) return false;
    }
    return true;
  }
  std::optional<Poly> as_polynomial() const {
    if (is_polynomial()) return num_;
    return std::nullopt;
  }
  // Fully expanded denominator.
  Poly denominator() const { return den_ * difference_product(dexp_); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    RatFunc r = x;
    std::vector<unsigned> top(x.dexp_.size());
    std::vector<unsigned> xe(top.size()), ye(top.size());
    for (std::size_t i = 0; i < top.size(); ++i) {
      top[i] = std::max(x.dexp_[i], y.dexp_[i]);
      xe[i] = top[i] - x.dexp_[i];
      ye[i] = top[i] - y.dexp_[i];
    }
    Poly xn = x.num_ * x.difference_product(xe);
    Poly yn = y.num_ * x.difference_product(ye);
    if (x.den_ == y.den_) {
      r.num_ = xn + yn;
    } else {
      r.num_ = xn * y.den_ + yn * x.den_;
      r.den_ = x.den_ * y.den_;
    }
    r.dexp_ = std::move(top);
    r.normalize();
    return r;
  }
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

  friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    if (x.is_zero()) return x;
    if (y.is_zero()) return y;
    RatFunc r = x;
    r.num_ = x.num_ * y.num_;
    if (!y.den_.is_one()) r.den_ = x.den_ * y.den_;
    for (std::size_t i = 0; i < r.dexp_.size(); ++i) r.dexp_[i] += y.dexp_[i];
    r.normalize();
    return r;
  }
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y) { return x * y.inv(); }

  RatFunc inv() const {
    if (is_zero()) throw DivisionByZero();
    // Split the numerator into difference factors times a remainder.
    std::vector<unsigned> num_diff(dexp_.size(), 0);
    Poly rest = num_;
    for (int a = 0; a < nvars(); ++a) {
      for (int b = a + 1; b < nvars(); ++b) {
        while (!rest.is_constant()) {
          auto q = rest.divide_by_difference(a, b);
          if (!q) break;
          rest = std::move(*q);
          ++num_diff[pair_index(a, b, nvars())];
        }
      }
    }
    RatFunc r = *this;
    std::vector<unsigned> up(dexp_.size());
    for (std::size_t i = 0; i < dexp_.size(); ++i) {
      const unsigned common = std::min(dexp_[i], num_diff[i]);
      up[i] = dexp_[i] - common;
      r.dexp_[i] = num_diff[i] - common;
    }
    r.num_ = den_ * difference_product(up);
    r.den_ = rest;
    r.normalize();
    return r;
  }

  RatFunc derivative(int var) const {
    // (N / (G D))' = N'/(G D) - N G'/(G^2 D) - sum_p e_p s_p N / (G D d_p)
    RatFunc r = *this;
    r.num_ = num_.derivative(var);
    r.normalize();
    if (!den_.is_constant()) {
      RatFunc t = *this;
      t.num_ = -(num_ * den_.derivative(var));
      t.den_ = den_ * den_;
      t.normalize();
      r = r + t;
    }
    for (int a = 0; a < nvars(); ++a) {
      for (int b = a + 1; b < nvars(); ++b) {
        const std::size_t idx = pair_index(a, b, nvars());
        if (dexp_[idx] == 0 || (var != a && var != b)) continue;
        RatFunc t = *this;
        const long long s = (var == a) ? -static_cast<long long>(dexp_[idx]) : static_cast<long long>(dexp_[idx]);
        t.num_ = num_.scaled(base().from_int(s));
        ++t.dexp_[idx];
        t.normalize();
        r = r + t;
      }
    }
    return r;
  }

  // Evaluation at a point; throws DivisionByZero on a pole.
  Element evaluate(const std::vector<Element>& point) const {
    Element d = den_.evaluate(point);
    for (int a = 0; a < nvars(); ++a) {
      for (int b = a + 1; b < nvars(); ++b) {
        const unsigned e = dexp_[pair_index(a, b, nvars())];
        const Element diff = point[static_cast<std::size_t>(a)] - point[static_cast<std::size_t>(b)];
        for (unsigned k = 0; k < e; ++k) d = d * diff;
      }
    }
    if (d.is_zero()) throw DivisionByZero();
    return num_.evaluate(point) / d;
  }

  friend bool operator==(const RatFunc& x, const RatFunc& y) {
    if (x.den_.is_one() && y.den_.is_one()) return x.dexp_ == y.dexp_ && x.num_ == y.num_;
    std::vector<unsigned> xe(x.dexp_.size()), ye(x.dexp_.size());
    for (std::size_t i = 0; i < xe.size(); ++i) {
      const unsigned m = std::min(x.dexp_[i], y.dexp_[i]);
      xe[i] = x.dexp_[i] - m;
      ye[i] = y.dexp_[i] - m;
    }
    return x.num_ * y.den_ * x.difference_product(ye) == y.num_ * x.den_ * x.difference_product(xe);
  }

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
    os << "(" << f.num_ << ")";
    if (f.is_polynomial()) return os;
    os << " / (";
    bool first = true;
    if (!f.den_.is_one()) {
      os << "(" << f.den_ << ")";
      first = false;
    }
    for (int a = 0; a < f.nvars(); ++a) {
      for (int b = a + 1; b < f.nvars(); ++b) {
        const unsigned e = f.dexp_[pair_index(a, b, f.nvars())];
        if (!e) continue;
        if (!first) os << "*";
        first = false;
        os << "(z" << a + 1 << "-z" << b + 1 << ")^" << e;
      }
    }
    return os << ")";
  }

 private:
  static std::size_t pair_count(int n) { return static_cast<std::size_t>(n > 1 ? n * (n - 1) / 2 : 0); }

  Poly difference(int a, int b) const {
    return Poly::variable(base(), nvars(), a) - Poly::variable(base(), nvars(), b);
  }

  Poly difference_product(const std::vector<unsigned>& e) const {
    Poly r = Poly::constant(base(), nvars(), base().one());
    for (int a = 0; a < nvars(); ++a) {
      for (int b = a + 1; b < nvars(); ++b) {
        const unsigned k = e[pair_index(a, b, nvars())];
        if (k) r = r * difference(a, b).pow(k);
      }
    }
    return r;
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly::constant(base(), nvars(), base().one());
      std::fill(dexp_.begin(), dexp_.end(), 0u);
      return;
    }
    for (int a = 0; a < nvars(); ++a) {
      for (int b = a + 1; b < nvars(); ++b) {
        unsigned& e = dexp_[pair_index(a, b, nvars())];
        while (e > 0) {
          auto q = num_.divide_by_difference(a, b);
          if (!q) break;
          num_ = std::move(*q);
          --e;
        }
      }
    }
    const Element lc = den_.leading_coefficient();
    if (!(lc == base().one())) {
      const Element s = lc.inv();
      num_ = num_.scaled(s);
      den_ = den_.scaled(s);
    }
  }

  Poly num_;
  Poly den_;
  std::vector<unsigned> dexp_;
};

// F(z_1..z_n) as a field context.
template <Field F>
class RatFuncField {
 public:
  using Element = RatFunc<F>;
  using Poly = MultiPoly<F>;

  RatFuncField(F base, int nvars) : base_(std::move(base)), nvars_(nvars) {}

  const F& base() const { return base_; }
  int nvars() const { return nvars_; }
  std::uint64_t characteristic() const { return base_.characteristic(); }
  std::uint64_t order() const { return 0; }

  Element zero() const { return Element(Poly(base_, nvars_)); }
  Element one() const { return from_int(1); }
  Element from_int(long long n) const { return Element(Poly::constant(base_, nvars_, base_.from_int(n))); }
  Element from_base(const typename F::Element& c) const { return Element(Poly::constant(base_, nvars_, c)); }
  Element variable(int var) const { return Element(Poly::variable(base_, nvars_, var)); }
  Element from_poly(const Poly& p) const { return Element(p); }
  std::string name() const { return base_.name() + "(z1..z" + std::to_string(nvars_) + ")"; }

  friend bool operator==(const RatFuncField& a, const RatFuncField& b) {
    return a.base_ == b.base_ && a.nvars_ == b.nvars_;
  }

 private:
  F base_;
  int nvars_;
};

static_assert(Field<RatFuncField<PrimeField>>);

// Univariate fraction g/h in lowest terms with monic denominator.
template <Field F>
class UniRatFunc {
 public:
  using Poly = UniPoly<F>;

  UniRatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    Poly g = gcd(num_, den_);
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
    const auto lc_inv = den_.leading().inv();
    num_ = num_.scaled(lc_inv);
    den_ = den_.scaled(lc_inv);
  }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  friend bool operator==(const UniRatFunc& a, const UniRatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend std::ostream& operator<<(std::ostream& os, const UniRatFunc& f) {
    return os << "(" << f.num_ << ") / (" << f.den_ << ")";
  }

 private:
  Poly num_;
  Poly den_;
};

}  // namespace kzmodp

#endif  // KZMODP_RATFUNC_HPP
