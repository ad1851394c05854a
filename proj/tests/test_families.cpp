#include <doctest.h>

#include "jpa/families.hpp"

using namespace jpa;

namespace {

FamilyParams mk(int n, int m, long t, std::vector<long> c) {
  FamilyParams p;
  p.n = n;
  p.m = m;
  p.t = t;
  for (long v : c) p.c.emplace_back(v);
  return p;
}

}  // namespace

TEST_CASE("recurrence table basics") {
  // u_{i,n} = c_i: the first post-seed column reproduces the coefficients
  std::vector<mpz_class> c = {1, 0, 2, 3};
  auto tab = recurrence_table(c, 4, 10);
  for (int i = 0; i < 4; ++i) CHECK(tab.at(i, 4) == c[i]);
  // seed block is the identity
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) CHECK(tab.at(i, k) == (i == k ? 1 : 0));
  // recurrence holds at a spot-checked entry
  mpz_class s = 0;
  for (int j = 0; j < 4; ++j) s += c[j] * tab.at(2, 6 + j);
  CHECK(tab.at(2, 10) == s);
}

TEST_CASE("family polynomial knowns") {
  CHECK(format_intpoly(family_poly(mk(4, 4, 1, {1, 0, 1, 1}))) == "-2,0,-2,-2,1");
  CHECK(format_intpoly(family_poly(mk(4, 5, 10, {1, 0, 0, 1}))) == "-11,-10,0,-11,1");
  CHECK(format_intpoly(family_poly(mk(3, 4, 1, {1, 0, 1}))) == "-2,-1,-2,1");
}

TEST_CASE("the two starting-vector forms agree") {
  for (auto& p : {mk(3, 4, 1, {1, 0, 1}), mk(4, 5, 2, {1, 1, 2, 3}), mk(2, 6, 1, {1, 2})}) {
    auto F = family_field(p);
    auto a = alpha0(p, F, Alpha0Form::sum);
    auto b = alpha0(p, F, Alpha0Form::complement);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("family verification: spot cases") {
  auto rep = verify_family(mk(3, 4, 1, {1, 0, 1}));
  CHECK(rep.pass);
  CHECK(rep.status == ExpansionStatus::PurelyPeriodic);
  CHECK(rep.l1 == 4);
  CHECK(rep.unit_norm == 1);

  auto rep2 = verify_family(mk(4, 5, 10, {1, 0, 0, 1}));
  CHECK(rep2.pass);
  CHECK(rep2.l1 == 5);

  auto rep3 = verify_family(mk(2, 9, 3, {1, 2}));
  CHECK(rep3.pass);
  CHECK(rep3.l1 == 9);
}

TEST_CASE("scaled-coefficient variant: period lcm(m, n)") {
  auto p = mk(3, 4, 1, {2, 0, 2});
  CHECK(p.mode() == FamilyParams::Mode::scaled);
  auto rep = verify_family(p);
  CHECK(rep.pass);
  CHECK(rep.status == ExpansionStatus::PurelyPeriodic);
  CHECK(rep.l0 == 0);
  CHECK(rep.l1 == 12);  // lcm(4, 3)
}

TEST_CASE("recurrence inequalities hold over grid tables") {
  for (auto c : std::vector<std::vector<mpz_class>>{
           {1, 0, 1}, {1, 1, 1}, {1, 2, 3}, {1, 0, 0, 1}, {1, 1, 2, 2}, {1, 3}}) {
    int n = static_cast<int>(c.size());
    auto rep = recurrence_oracles(c, n, 3 * n + 4);
    for (const auto& chk : rep.checks) {
      INFO(chk.name, ": ", chk.detail);
      CHECK(chk.pass);
    }
    CHECK(rep.all_pass());
  }
}

TEST_CASE("grid case enumeration counts") {
  auto cases = grid_cases();
  // chains per degree n = 2..5 with the default caps: 3, 9, 19, 34
  long per_n[4] = {0, 0, 0, 0};
  for (const auto& p : cases) per_n[p.n - 2]++;
  CHECK(per_n[0] == 3 * 6 * 3);
  CHECK(per_n[1] == 9 * 6 * 3);
  CHECK(per_n[2] == 19 * 6 * 3);
  CHECK(per_n[3] == 34 * 6 * 3);
  CHECK(cases.size() == 1170);
  for (const auto& p : cases) CHECK_NOTHROW(p.validate());
}

TEST_CASE("parameter validation rejects bad shapes") {
  CHECK_THROWS_AS(mk(3, 2, 1, {1, 0, 1}).validate(), std::invalid_argument);   // m < n
  CHECK_THROWS_AS(mk(3, 4, 0, {1, 0, 1}).validate(), std::invalid_argument);   // t < 1
  CHECK_THROWS_AS(mk(3, 4, 1, {1, 2, 1}).validate(), std::invalid_argument);   // chain broken
  CHECK_THROWS_AS(mk(3, 4, 1, {3, 2, 4}).validate(), std::invalid_argument);   // c0 > 1, no divisibility
  CHECK_NOTHROW(mk(3, 4, 1, {2, 0, 2}).validate());                            // scaled variant
}
