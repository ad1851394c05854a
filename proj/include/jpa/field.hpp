#pragma once

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "jpa/poly.hpp"

namespace jpa {

// Raised when arithmetic in Q[X]/(f) meets a zero divisor, i.e. when the
// (conjecturally irreducible) defining polynomial turns out reducible.
class ZeroDivisorError : public std::runtime_error {
 public:
  ZeroDivisorError(std::string what, IntPoly witness)
      : std::runtime_error(std::move(what)), witness(std::move(witness)) {}
  IntPoly witness;  // nontrivial factor of f
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Q[X]/(f) for monic integer f with a certified isolating bracket for the
// distinguished positive real root omega. The bracket cache only shrinks;
// concurrent readers always see a valid isolating interval.
class NumberField {
 public:
  enum class Mode { steep, positive_root };

  NumberField(IntPoly f, Mode mode = Mode::steep);

  const IntPoly& poly() const { return f_; }
  int degree() const { return n_; }
  Interval bracket() const;
  // Bracket of width <= 2^-bits (endpoints stay dyadic: pure bisection).
  Interval bracket_refined(long bits) const;

  // Exact sign of a(omega) for nonzero a with deg a < deg f. Throws
  // ZeroDivisorError if a(omega) = 0, which certifies f reducible.
  int sign_at_omega(const IntPoly& a) const;

  bool operator==(const NumberField& o) const { return f_ == o.f_; }

 private:
  IntPoly f_;
  int n_;
  mutable std::mutex mu_;
  mutable Interval br_;
  mutable long br_bits_ = 0;
  mutable int sign_lo_ = 0;
  // X^k mod f for k = n .. 2n-2 (integer coefficients, f monic)
  std::vector<std::vector<mpz_class>> xpow_;
  friend class FieldElem;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr field_new(const IntPoly& f, NumberField::Mode mode = NumberField::Mode::steep);

// Element of Q[X]/(f): c0 + c1*omega + ... + c_{n-1}*omega^{n-1}.
// Canonical representation: equality is coefficient-vector equality.
class FieldElem {
 public:
  FieldElem(FieldPtr field, std::vector<mpq_class> coeffs);
  static FieldElem from_rational(FieldPtr field, const mpq_class& v);
  static FieldElem omega(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;  // c1 = ... = c_{n-1} = 0

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inv() const;
  FieldElem pow(long e) const;
  bool operator==(const FieldElem& o) const;

  int sign() const;
  mpz_class floor() const;
  mpq_class norm() const;
  // Enclosure of the real value, width <= 2^-bits.
  Interval enclosure(long bits) const;

  size_t max_bits() const;  // largest coefficient size, growth guard
  std::string key() const;  // canonical text, hashable state key
  std::string str() const;

 private:
  RatPoly rep() const;
  FieldPtr field_;
  std::vector<mpq_class> c_;
};

FieldElem operator*(const mpq_class& s, const FieldElem& a);
FieldElem operator+(const FieldElem& a, const mpq_class& s);
FieldElem operator-(const FieldElem& a, const mpq_class& s);

std::string format_elem(const FieldElem& e);  // "c0,c1,...,c_{n-1}"
FieldElem parse_elem(const FieldPtr& field, const std::string& s);

}  // namespace jpa
