#include <doctest.h>

#include <random>

#include "jpa/field.hpp"

using namespace jpa;

namespace {

std::mt19937_64 rng(0xF1E1Du);

mpq_class rnd_q(long mag) {
  long num = static_cast<long>(rng() % (2 * mag + 1)) - mag;
  long den = 1 + static_cast<long>(rng() % mag);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

FieldElem rnd_elem(const FieldPtr& F, long mag = 12) {
  std::vector<mpq_class> c(F->degree());
  for (auto& x : c) x = rnd_q(mag);
  return FieldElem(F, std::move(c));
}

}  // namespace

TEST_CASE("field ring axioms on random elements") {
  auto F = field_new(parse_intpoly("-2,-1,-2,1"));  // X^3 - 2X^2 - X - 2
  for (int it = 0; it < 60; ++it) {
    FieldElem a = rnd_elem(F);
    FieldElem b = rnd_elem(F);
    FieldElem c = rnd_elem(F);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == FieldElem::from_rational(F, 0));
    CHECK(a + (-a) == FieldElem::from_rational(F, 0));
    CHECK(a * FieldElem::from_rational(F, 1) == a);
  }
}

TEST_CASE("inverse: a * a^-1 == 1") {
  auto F = field_new(parse_intpoly("-17,0,0,1"), NumberField::Mode::positive_root);
  FieldElem one = FieldElem::from_rational(F, 1);
  for (int it = 0; it < 40; ++it) {
    FieldElem a = rnd_elem(F);
    if (a.is_zero()) continue;
    CHECK(a * a.inv() == one);
  }
  // pow consistency
  FieldElem w = FieldElem::omega(F);
  CHECK(w.pow(3) == FieldElem::from_rational(F, 17));
  CHECK(w.pow(-1) == w.inv());
  CHECK(w.pow(0) == one);
}

TEST_CASE("floor bounds: floor <= a < floor + 1") {
  auto F = field_new(parse_intpoly("-2,-1,-2,1"));
  for (int it = 0; it < 60; ++it) {
    FieldElem a = rnd_elem(F);
    mpz_class fl = a.floor();
    FieldElem lo = a - mpq_class(fl);
    FieldElem hi = a - mpq_class(fl + 1);
    CHECK(lo.sign() >= 0);
    CHECK(hi.sign() < 0);
  }
  // exact integers: floor is the integer itself
  FieldElem five = FieldElem::from_rational(F, 5);
  CHECK(five.floor() == 5);
  FieldElem neg = FieldElem::from_rational(F, mpq_class(-7, 2));
  CHECK(neg.floor() == -4);
}

TEST_CASE("norm: multiplicative, rational r gives r^n") {
  auto F = field_new(parse_intpoly("-2,-1,-2,1"));
  for (int it = 0; it < 40; ++it) {
    FieldElem a = rnd_elem(F, 6);
    FieldElem b = rnd_elem(F, 6);
    CHECK((a * b).norm() == a.norm() * b.norm());
  }
  mpq_class r(3, 2);
  mpq_class expect = r * r * r;
  CHECK(FieldElem::from_rational(F, r).norm() == expect);
  // norm of omega = (-1)^n * f(0) = -(-2) = 2 for the cubic above
  CHECK(FieldElem::omega(F).norm() == 2);
}

TEST_CASE("format/parse round-trip") {
  auto F = field_new(parse_intpoly("-17,0,0,1"), NumberField::Mode::positive_root);
  for (int it = 0; it < 30; ++it) {
    FieldElem a = rnd_elem(F);
    std::string s = format_elem(a);
    CHECK(parse_elem(F, s) == a);
  }
  FieldElem e = parse_elem(F, "1/2,-3,0");
  CHECK(e.coeffs()[0] == mpq_class(1, 2));
  CHECK(e.coeffs()[1] == -3);
}

TEST_CASE("enclosure encloses and narrows") {
  auto F = field_new(parse_intpoly("-17,0,0,1"), NumberField::Mode::positive_root);
  FieldElem w = FieldElem::omega(F);
  Interval I = w.enclosure(64);
  CHECK(I.hi - I.lo <= mpq_class(1, mpz_class(1) << 62));
  // 17^(1/3) is about 2.5713
  CHECK(I.lo > mpq_class(257, 100));
  CHECK(I.hi < mpq_class(258, 100));
  // cube of the enclosure straddles 17
  FieldElem w3 = w * w * w;
  CHECK(w3 == FieldElem::from_rational(F, 17));
}

TEST_CASE("reducible defining polynomial surfaces as ZeroDivisorError") {
  // (X^2 - 2)(X^2 + 3) = X^4 + X^2 - 6; omega^2 - 2 is a zero divisor
  auto F = field_new(parse_intpoly("-6,0,1,0,1"), NumberField::Mode::positive_root);
  FieldElem w = FieldElem::omega(F);
  FieldElem z = w * w - mpq_class(2);
  bool threw = false;
  try {
    (void)z.sign();
    // sign may resolve via the gcd check instead of looping
  } catch (const ZeroDivisorError& e) {
    threw = true;
    CHECK(e.witness.degree() >= 1);
    CHECK(e.witness.degree() < 4);
  }
  if (!threw) {
    // inverting a zero divisor must fail
    CHECK_THROWS_AS((void)z.inv(), ZeroDivisorError);
  }
}

TEST_CASE("state keys are canonical") {
  auto F = field_new(parse_intpoly("-2,-1,-2,1"));
  FieldElem a = rnd_elem(F);
  FieldElem b = a + FieldElem::from_rational(F, 1) - FieldElem::from_rational(F, 1);
  CHECK(a.key() == b.key());
  FieldElem c = a + FieldElem::from_rational(F, mpq_class(1, 3));
  CHECK(a.key() != c.key());
}
