#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jpa/rat.hpp"

namespace jpa {

// Polynomial with arbitrary-precision integer coefficients, constant term
// first. The zero polynomial is the empty vector; degree(0) = -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static IntPoly x_power(int k);  // X^k
  static IntPoly constant(const mpz_class& v);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const mpz_class& lc() const;
  const mpz_class& operator[](int k) const { return c_[k]; }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  mpq_class eval(const mpq_class& x) const;
  mpz_class eval(const mpz_class& x) const;
  int sign_at(const mpq_class& x) const;  // exact sign of p(x)

  std::string str() const;  // human-readable, e.g. "X^3 - 2*X^2 - X - 2"

 private:
  void normalize();
  std::vector<mpz_class> c_;
};

// Polynomial with rational coefficients (each canonical, positive denominator).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { normalize(); }
  explicit RatPoly(const IntPoly& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpq_class& lc() const;
  const mpq_class& operator[](int k) const { return c_[k]; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  mpq_class eval(const mpq_class& x) const;

  // Clears denominators: returns (A, d) with d > 0 integer and this == A/d.
  std::pair<IntPoly, mpz_class> clear_denominators() const;

 private:
  void normalize();
  std::vector<mpq_class> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const mpz_class& s, const IntPoly& a);
IntPoly derivative(const IntPoly& p);
mpz_class content(const IntPoly& p);           // >= 0; gcd of coefficients
IntPoly primitive_part(const IntPoly& p);      // p / content, sign of lc kept
IntPoly reciprocal(const IntPoly& p);          // X^deg * p(1/X)

// Exact division; throws std::domain_error if the remainder is nonzero.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);  // b | a over Z[X]

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const mpq_class& s, const RatPoly& a);
RatPoly derivative(const RatPoly& p);

// Euclidean division over Q[X]: a = q*b + r with deg r < deg b.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic (or zero)
// g = gcd(a,b) monic, with s*a + t*b = g.
struct ExtGcd { RatPoly g, s, t; };
ExtGcd ext_gcd(const RatPoly& a, const RatPoly& b);

// Primitive gcd over Z[X], positive leading coefficient (or zero).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Resultant by the subresultant PRS (fraction-free). Convention:
// Res(f, g) = lc(f)^deg(g) * prod g(alpha_i) over the roots of f,
// so for monic f and constant c, Res(f, c) = c^deg(f).
mpz_class resultant(const IntPoly& p, const IntPoly& q);
mpz_class discriminant_resultant(const IntPoly& p);  // Res(p, p')

// Rational-endpoint interval, lo <= hi.
struct Interval {
  mpq_class lo, hi;
  Interval() = default;
  Interval(mpq_class l, mpq_class h);
  mpq_class width() const { return hi - lo; }
  mpq_class mid() const { return (lo + hi) / 2; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval eval_interval(const IntPoly& p, const Interval& x);
Interval eval_interval(const RatPoly& p, const Interval& x);

// Signed-remainder (Sturm) sequence of the squarefree part of p.
std::vector<RatPoly> sturm_chain(const IntPoly& p);
// Generalized chain starting from (f0, f1); used for Cauchy indices.
std::vector<RatPoly> signed_remainder_chain(RatPoly f0, RatPoly f1);
int variations_at(const std::vector<RatPoly>& chain, const mpq_class& x);
int variations_at_inf(const std::vector<RatPoly>& chain, int dir);  // dir = +1 / -1

// Number of distinct real roots of p in (lo, hi].
int count_real_roots(const IntPoly& p, const Interval& I);
int count_real_roots_total(const IntPoly& p);
int count_positive_real_roots(const IntPoly& p);  // in (0, inf)
// 1 + max |c_i / lc|; every real root lies in (-B, B).
mpq_class root_bound(const IntPoly& p);

enum class IsolationMode { steep, positive_root };
// steep: checks the coefficient shape (monic, a_{n-1} >= 1, a_{n-1} >= a_0 > 0,
// a_{n-1} >= ... >= a_1 >= 0) and returns the bracket (a_{n-1}, a_{n-1}+1).
// positive_root: any monic p with exactly one positive real root (Sturm-checked).
Interval isolate_dominant_root(const IntPoly& p, IsolationMode mode = IsolationMode::steep);
bool steep_shape_ok(const IntPoly& p);

// Bisection; input must isolate one simple root (sign change at endpoints).
Interval refine_root(const IntPoly& p, Interval I, const mpq_class& eps);
// Isolating intervals for all distinct real roots of p in (lo, hi).
std::vector<Interval> isolate_real_roots(const IntPoly& p, Interval range);

IntPoly cyclotomic_poly(int m);

struct IrreducibilityVerdict {
  enum class Kind { Irreducible, Reducible, Unknown };
  Kind kind = Kind::Unknown;
  IntPoly witness;  // exact divisor when Reducible
  std::string note;
  bool irreducible() const { return kind == Kind::Irreducible; }
  bool reducible() const { return kind == Kind::Reducible; }
};

// Layered test: rational roots, cyclotomic divisors with phi(d) <= deg,
// then factorization degree-sets modulo `prime_count` good primes.
IrreducibilityVerdict irreducibility_verdict(const IntPoly& g, int prime_count = 8);

IntPoly parse_intpoly(const std::string& s);  // "c0,c1,...,cn"
std::string format_intpoly(const IntPoly& p);

}  // namespace jpa
