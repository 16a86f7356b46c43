#ifndef KZMODP_FIELD_HPP
#define KZMODP_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "kzmodp/errors.hpp"

namespace kzmodp {

using Rng = std::mt19937_64;

// A field is a small context object that creates elements; elements carry
// whatever they need (modulus, shared tables) to do arithmetic through the
// ordinary operators. Generic code never default-constructs an element; it
// asks the field for zero()/one()/from_int().
template <class F>
concept Field = requires(const F& f, const typename F::Element& a, long long n) {
  typename F::Element;
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(n) } -> std::same_as<typename F::Element>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { a + a } -> std::same_as<typename F::Element>;
  { a - a } -> std::same_as<typename F::Element>;
  { a * a } -> std::same_as<typename F::Element>;
  { a / a } -> std::same_as<typename F::Element>;
  { -a } -> std::same_as<typename F::Element>;
  { a.inv() } -> std::same_as<typename F::Element>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == a } -> std::convertible_to<bool>;
};

// Deterministic for all 32-bit inputs (Miller-Rabin with bases 2, 7, 61).
bool is_prime(std::uint64_t n);

// Element of Z/pZ. Canonical representative in [0, p).
class Fp {
 public:
  Fp() = default;
  Fp(std::uint32_t value, std::uint32_t modulus) : v_(value % modulus), p_(modulus) {}

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp inv() const;
  Fp pow(std::uint64_t e) const;

  Fp operator-() const { return Fp::raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o) {
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + p_ - o.v_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

class PrimeField {
 public:
  using Element = Fp;

  // Throws NotPrime unless p is a prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t order() const { return p_; }
  int degree() const { return 1; }

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Fp(static_cast<std::uint32_t>(r), p_);
  }
  Fp random(Rng& rng) const {
    return Fp(static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(0, p_ - 1)(rng)), p_);
  }
  std::string name() const { return "F_" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

// Exact rationals; characteristic zero.
class Rational {
 public:
  using Value = boost::multiprecision::cpp_rational;

  Rational() = default;
  explicit Rational(Value v) : v_(std::move(v)) {}

  const Value& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  Rational inv() const {
    if (v_ == 0) throw DivisionByZero();
    return Rational(Value(1) / v_);
  }
  Rational operator-() const { return Rational(-v_); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw DivisionByZero();
    return Rational(a.v_ / b.v_);
  }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.v_; }

 private:
  Value v_{0};
};

class RationalField {
 public:
  using Element = Rational;

  std::uint64_t characteristic() const { return 0; }
  std::uint64_t order() const { return 0; }
  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(Rational::Value(1)); }
  Rational from_int(long long n) const { return Rational(Rational::Value(n)); }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

static_assert(Field<PrimeField>);
static_assert(Field<RationalField>);

// Inverse of an integer in F; throws DivisionByZero when it vanishes there.
template <Field F>
typename F::Element inverse_of_int(const F& field, long long n) {
  auto e = field.from_int(n);
  if (e.is_zero()) throw DivisionByZero();
  return e.inv();
}

}  // namespace kzmodp

#endif  // KZMODP_FIELD_HPP
