#ifndef KZMODP_EXT_FIELD_HPP
#define KZMODP_EXT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "kzmodp/field.hpp"
#include "kzmodp/unipoly.hpp"

namespace kzmodp {

namespace detail {

struct ExtData {
  std::uint32_t p;
  int degree;
  // Monic modulus, lowest degree first, size degree + 1.
  std::vector<std::uint32_t> modulus;
};

}  // namespace detail

// Element of F_p[y]/(m(y)), stored as degree-1 coefficients in y.
class ExtElem {
 public:
  ExtElem() = default;
  ExtElem(std::shared_ptr<const detail::ExtData> ctx, std::vector<std::uint32_t> coeffs);

  const std::vector<std::uint32_t>& coefficients() const { return c_; }
  std::uint32_t characteristic() const { return ctx_->p; }
  bool is_zero() const;
  ExtElem inv() const;

  ExtElem operator-() const;
  friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inv(); }
  friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.c_ == b.c_; }
  friend std::ostream& operator<<(std::ostream& os, const ExtElem& a);

 private:
  std::shared_ptr<const detail::ExtData> ctx_;
  std::vector<std::uint32_t> c_;
};

// F_{p^e} as F_p[y]/(m(y)) with m monic irreducible of degree e.
class ExtField {
 public:
  using Element = ExtElem;

  // Uses the lexicographically first monic irreducible of the given degree.
  ExtField(const PrimeField& base, int degree);
  // Throws NotIrreducible when the modulus has a factor of degree <= e/2.
  ExtField(const PrimeField& base, const UniPoly<PrimeField>& modulus);

  const PrimeField& base() const { return base_; }
  int degree() const { return data_->degree; }
  std::uint64_t characteristic() const { return data_->p; }
  // p^e, saturating at UINT64_MAX.
  std::uint64_t order() const;
  UniPoly<PrimeField> modulus() const;

  ExtElem zero() const;
  ExtElem one() const;
  ExtElem from_int(long long n) const;
  ExtElem from_base(const Fp& a) const;
  ExtElem from_coefficients(std::vector<std::uint32_t> c) const;
  // The class of y, a generator of the extension.
  ExtElem generator() const;
  ExtElem random(Rng& rng) const;
  std::string name() const;

  friend bool operator==(const ExtField& a, const ExtField& b) {
    return a.data_->p == b.data_->p && a.data_->modulus == b.data_->modulus;
  }

 private:
  PrimeField base_;
  std::shared_ptr<const detail::ExtData> data_;
};

static_assert(Field<ExtField>);

// Irreducibility over F_p: gcd(f, y^{p^i} - y) = 1 for every i <= deg f / 2.
bool is_irreducible(const UniPoly<PrimeField>& f);

}  // namespace kzmodp

#endif  // KZMODP_EXT_FIELD_HPP
