#ifndef KZMODP_ERRORS_HPP
#define KZMODP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kzmodp {

// Base for all recoverable errors raised by the library. Internal invariant
// violations use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class InexactDivision : public Error {
 public:
  InexactDivision() : Error("inexact division: nonzero remainder") {}
};

class NotPrime : public Error {
 public:
  explicit NotPrime(const std::string& what) : Error(what) {}
};

class NotAdmissible : public Error {
 public:
  explicit NotAdmissible(const std::string& reason)
      : Error("not admissible: " + reason) {}
};

class NotIrreducible : public Error {
 public:
  NotIrreducible() : Error("extension modulus is not irreducible") {}
};

class DegreeTooHigh : public Error {
 public:
  explicit DegreeTooHigh(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class CharacteristicClash : public Error {
 public:
  CharacteristicClash() : Error("q is not invertible in the coefficient field") {}
};

class InsufficientField : public Error {
 public:
  InsufficientField() : Error("field cannot supply enough distinct coordinates") {}
};

class NotInCriterion : public Error {
 public:
  NotInCriterion() : Error("x-derivative does not lie in the logarithmic span") {}
};

class NonzeroWronskian : public Error {
 public:
  NonzeroWronskian() : Error("Wronskian is not identically zero") {}
};

class DerivativeNonzero : public Error {
 public:
  DerivativeNonzero() : Error("rational function has nonzero derivative") {}
};

class InvalidPoint : public Error {
 public:
  explicit InvalidPoint(const std::string& what) : Error(what) {}
};

}  // namespace kzmodp

#endif  // KZMODP_ERRORS_HPP
