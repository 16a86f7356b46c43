#ifndef KZMODP_MULTIPOLY_HPP
#define KZMODP_MULTIPOLY_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kzmodp/field.hpp"

namespace kzmodp {

// Exponent vector packed one byte per variable, variable 0 in the most
// significant byte, so integer order is lexicographic order.
class Monomial {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr unsigned kMaxExponent = 255;

  Monomial() = default;
  explicit Monomial(std::uint64_t key) : key_(key) {}
  static Monomial from_exponents(const std::vector<unsigned>& e) {
    if (e.size() > kMaxVars) throw std::overflow_error("too many variables");
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > kMaxExponent) throw std::overflow_error("exponent too large");
      k |= std::uint64_t{e[i]} << shift(static_cast<int>(i));
    }
    return Monomial(k);
  }
  static Monomial variable(int var, unsigned power = 1) {
    if (power > kMaxExponent) throw std::overflow_error("exponent too large");
    return Monomial(std::uint64_t{power} << shift(var));
  }

  std::uint64_t key() const { return key_; }
  unsigned exponent(int var) const { return static_cast<unsigned>((key_ >> shift(var)) & 0xFF); }
  Monomial with_exponent(int var, unsigned e) const {
    if (e > kMaxExponent) throw std::overflow_error("exponent too large");
    return Monomial((key_ & ~(std::uint64_t{0xFF} << shift(var))) | (std::uint64_t{e} << shift(var)));
  }
  unsigned total_degree() const {
    unsigned d = 0;
    for (int v = 0; v < kMaxVars; ++v) d += exponent(v);
    return d;
  }
  std::vector<unsigned> exponents(int nvars) const {
    std::vector<unsigned> e(static_cast<std::size_t>(nvars));
    for (int v = 0; v < nvars; ++v) e[static_cast<std::size_t>(v)] = exponent(v);
    return e;
  }

  friend Monomial operator*(Monomial a, Monomial b) {
    const std::uint64_t s = a.key_ + b.key_;
    // A carry out of any byte shows up as a mismatch in the low bit of the next.
    const std::uint64_t carries = (a.key_ ^ b.key_ ^ s) & 0x0101010101010100ULL;
    if (carries != 0 || s < a.key_) throw std::overflow_error("monomial exponent overflow");
    return Monomial(s);
  }
  friend bool operator==(Monomial a, Monomial b) { return a.key_ == b.key_; }
  friend auto operator<=>(Monomial a, Monomial b) { return a.key_ <=> b.key_; }

 private:
  static int shift(int var) { return 8 * (kMaxVars - 1 - var); }
  std::uint64_t key_ = 0;
};

namespace detail {

// Open-addressing map from monomial keys to coefficients, for products with
// many colliding terms.
template <class Value>
class FlatAccumulator {
 public:
  explicit FlatAccumulator(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    slots_.resize(cap);
    set_mask();
  }

  void add(std::uint64_t key, const Value& c) {
    if (2 * (used_ + 1) > slots_.size()) grow();
    insert(key, c, true);
  }

  template <class Fn>
  void drain(Fn&& fn) {
    for (auto& s : slots_) {
      if (s.val) fn(s.key, std::move(*s.val));
    }
  }

 private:
  struct Slot {
    std::uint64_t key = 0;
    std::optional<Value> val;
  };

  void insert(std::uint64_t key, const Value& c, bool sum) {
    std::size_t i = static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ULL) >> shift_);
    for (;;) {
      Slot& s = slots_[i];
      if (!s.val) {
        s.key = key;
        s.val.emplace(c);
        ++used_;
        return;
      }
      if (s.key == key) {
        if (sum) *s.val = *s.val + c;
        return;
      }
      i = (i + 1) & mask_;
    }
  }

  void grow() {
    std::vector<Slot> old(slots_.size() * 2);
    old.swap(slots_);
    set_mask();
    used_ = 0;
    for (auto& s : old) {
      if (s.val) insert(s.key, *s.val, false);
    }
  }

  // Fibonacci hashing: the top bits of key * 2^64/phi pick the slot.
  void set_mask() {
    mask_ = slots_.size() - 1;
    shift_ = 64 - std::countr_zero(slots_.size());
  }

  std::vector<Slot> slots_;
  std::size_t mask_ = 0, used_ = 0;
  int shift_ = 64;
};

}  // namespace detail

// Sparse multivariate polynomial; terms sorted by ascending monomial, no zero
// coefficients stored.
template <Field F>
class MultiPoly {
 public:
  using Element = typename F::Element;
  using Term = std::pair<Monomial, Element>;

  MultiPoly(F field, int nvars) : field_(std::move(field)), nvars_(nvars) {
    if (nvars < 0 || nvars > Monomial::kMaxVars) throw std::overflow_error("unsupported number of variables");
  }
  MultiPoly(F field, int nvars, std::vector<Term> terms) : MultiPoly(std::move(field), nvars) {
    std::unordered_map<std::uint64_t, Element> acc;
    for (auto& [m, c] : terms) accumulate(acc, m, c);
    assign_from(std::move(acc));
  }

  static MultiPoly constant(const F& field, int nvars, const Element& c) {
    MultiPoly r(field, nvars);
    if (!c.is_zero()) r.terms_.emplace_back(Monomial(), c);
    return r;
  }
  static MultiPoly variable(const F& field, int nvars, int var) {
    if (var < 0 || var >= nvars) throw std::out_of_range("variable index");
    MultiPoly r(field, nvars);
    r.terms_.emplace_back(Monomial::variable(var), field.one());
    return r;
  }

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.key() == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first.key() == 0 && terms_[0].second == field_.one(); }
  Element constant_term() const {
    return (!terms_.empty() && terms_[0].first.key() == 0) ? terms_[0].second : field_.zero();
  }
  // Coefficient of the lexicographically largest monomial.
  Element leading_coefficient() const { return terms_.empty() ? field_.zero() : terms_.back().second; }
  Element coeff(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial k) { return t.first < k; });
    return (it != terms_.end() && it->first == m) ? it->second : field_.zero();
  }
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
    return d;
  }
  unsigned degree_in(int var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.exponent(var));
    return d;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.field_, a.nvars_);
    if (b.terms_.size() == 1 && b.terms_[0].first.key() == 0) return a.scaled(b.terms_[0].second);
    if (a.terms_.size() == 1 && a.terms_[0].first.key() == 0) return b.scaled(a.terms_[0].second);
    const std::size_t expected = std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1u << 16);
    MultiPoly r(a.field_, a.nvars_);
    detail::FlatAccumulator<Element> acc(expected);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) acc.add((ma * mb).key(), ca * cb);
    }
    acc.drain([&](std::uint64_t k, Element&& c) {
      if (!c.is_zero()) r.terms_.emplace_back(Monomial(k), std::move(c));
    });
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const Element& s) const {
    MultiPoly r(field_, nvars_);
    if (s.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, c * s);
    return r;
  }
  MultiPoly times_monomial(Monomial m) const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.first = t.first * m;
    return r;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(field_, nvars_, field_.one());
    MultiPoly b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  MultiPoly derivative(int var) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      const unsigned e = m.exponent(var);
      if (e == 0) continue;
      Element nc = c * field_.from_int(e);
      if (nc.is_zero()) continue;
      out.emplace_back(m.with_exponent(var, e - 1), std::move(nc));
    }
    MultiPoly r(field_, nvars_);
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    r.terms_ = std::move(out);  // exponent decrement keeps distinct monomials distinct
    return r;
  }

  Element evaluate(const std::vector<Element>& point) const {
    Element r = field_.zero();
    for (const auto& [m, c] : terms_) {
      Element t = c;
      for (int v = 0; v < nvars_; ++v) {
        for (unsigned k = 0; k < m.exponent(v); ++k) t = t * point[static_cast<std::size_t>(v)];
      }
      r = r + t;
    }
    return r;
  }

  // Substitute variable `from` := variable `to`.
  MultiPoly identify(int from, int to) const {
    std::unordered_map<std::uint64_t, Element> acc;
    for (const auto& [m, c] : terms_) {
      const Monomial nm = m.with_exponent(from, 0).with_exponent(to, m.exponent(to) + m.exponent(from));
      accumulate(acc, nm, c);
    }
    MultiPoly r(field_, nvars_);
    r.assign_from(std::move(acc));
    return r;
  }

  // Exact quotient by (z_a - z_b), or nullopt when it does not divide.
  std::optional<MultiPoly> divide_by_difference(int a, int b) const {
    if (is_zero()) return *this;
    // Write f = sum_d f_d z_a^d; the quotient g satisfies g_{d-1} = f_d + z_b g_d.
    const unsigned top = degree_in(a);
    if (top == 0) return std::nullopt;
    std::vector<std::vector<Term>> slices(top + 1);
    for (const auto& [m, c] : terms_) slices[m.exponent(a)].emplace_back(m.with_exponent(a, 0), c);
    const Monomial zb = Monomial::variable(b);
    MultiPoly carry(field_, nvars_);
    std::vector<Term> quotient;
    for (unsigned d = top; d >= 1; --d) {
      MultiPoly fd(field_, nvars_);
      fd.terms_ = std::move(slices[d]);
      carry = fd + carry.times_monomial(zb);  // this is g_{d-1}
      for (const auto& [m, c] : carry.terms_) quotient.emplace_back(m.with_exponent(a, d - 1), c);
    }
    MultiPoly f0(field_, nvars_);
    f0.terms_ = std::move(slices[0]);
    if (!(f0 + carry.times_monomial(zb)).is_zero()) return std::nullopt;
    std::sort(quotient.begin(), quotient.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    MultiPoly q(field_, nvars_);
    q.terms_ = std::move(quotient);
    return q;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) return false;
    }
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& f) {
    if (f.is_zero()) return os << "0";
    for (std::size_t i = f.terms_.size(); i-- > 0;) {
      const auto& [m, c] = f.terms_[i];
      os << "(" << c << ")";
      for (int v = 0; v < f.nvars_; ++v) {
        if (m.exponent(v)) os << "*z" << (v + 1) << "^" << m.exponent(v);
      }
      if (i) os << " + ";
    }
    return os;
  }

 private:
  static void accumulate(std::unordered_map<std::uint64_t, Element>& acc, Monomial m, const Element& c) {
    auto [it, inserted] = acc.try_emplace(m.key(), c);
    if (!inserted) it->second = it->second + c;
  }

  void assign_from(std::unordered_map<std::uint64_t, Element>&& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [k, c] : acc) {
      if (!c.is_zero()) terms_.emplace_back(Monomial(k), std::move(c));
    }
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  }

  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    MultiPoly r(a.field_, a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        Element c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  F field_;
  int nvars_;
  std::vector<Term> terms_;
};

}  // namespace kzmodp

#endif  // KZMODP_MULTIPOLY_HPP
