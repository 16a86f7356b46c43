#include "kzmodp/field.hpp"

namespace kzmodp {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 61ULL}) {
    if (n % small == 0) return n == small;
  }
  if (n >= (1ULL << 32)) {
    // Trial division beyond the deterministic witness range.
    for (std::uint64_t d = 17; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Fp Fp::inv() const {
  if (v_ == 0) throw DivisionByZero();
  // Extended Euclid on (v, p).
  long long a = v_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    long long t = a / m;
    long long r = a - t * m;
    a = m;
    m = r;
    long long nx = x0 - t * x1;
    x0 = x1;
    x1 = nx;
  }
  long long r = x0 % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Fp(static_cast<std::uint32_t>(r), p_);
}

Fp Fp::pow(std::uint64_t e) const {
  return Fp(static_cast<std::uint32_t>(pow_mod(v_, e, p_)), p_);
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw NotPrime(std::to_string(p) + " is not a prime below 2^31");
  }
  p_ = static_cast<std::uint32_t>(p);
}

}  // namespace kzmodp
