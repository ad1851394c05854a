#include <doctest.h>

#include <map>

#include "jpa/pureroot.hpp"

using namespace jpa;

TEST_CASE("degenerate radicands") {
  CHECK(is_degenerate_radicand(8, 3));    // 2^3
  CHECK(is_degenerate_radicand(4, 2));    // 2^2
  CHECK(is_degenerate_radicand(16, 4));   // 2^4, and 4^2
  CHECK(is_degenerate_radicand(64, 6));   // several ways
  CHECK_FALSE(is_degenerate_radicand(17, 3));
  CHECK_FALSE(is_degenerate_radicand(4, 3));   // 4 is a square, but 2 does not divide 3
  CHECK_FALSE(is_degenerate_radicand(2, 2));
  CHECK_THROWS_AS((void)pure_root_alpha0(8, 3), DegenerateCaseError);
  CHECK_THROWS_AS((void)pure_root_alpha0(16, 4), DegenerateCaseError);
}

TEST_CASE("starting vector is the power basis tail") {
  auto [cs, alpha] = pure_root_alpha0(17, 3);
  CHECK(cs.m == 17);
  CHECK(cs.n == 3);
  CHECK(format_intpoly(cs.field->poly()) == "-17,0,0,1");
  REQUIRE(alpha.size() == 2);
  CHECK(alpha[0] == FieldElem::omega(cs.field));
  CHECK(alpha[1] == FieldElem::omega(cs.field).pow(2));
}

TEST_CASE("cube root scan: frozen small periods and the stubborn set") {
  std::map<long, ScanRecord> recs;
  scan_nth_roots(3, 2, 20, 2000, [&](const ScanRecord& r) {
    recs[r.params.at("m").get<long>()] = r;
  });
  REQUIRE(recs.size() == 19);

  std::map<long, std::pair<long, long>> expected = {
      {2, {2, 1}},  {3, {2, 2}},   {5, {7, 6}},   {7, {4, 3}},   {9, {2, 1}},
      {10, {2, 3}}, {12, {2, 11}}, {14, {4, 4}},  {16, {30, 18}}, {18, {9, 9}},
      {17, {32, 61}}};
  for (auto& [m, lens] : expected) {
    INFO("m = ", m);
    CHECK(recs[m].status == "Periodic");
    CHECK(recs[m].l0 == lens.first);
    CHECK(recs[m].l1 == lens.second);
  }
  CHECK(recs[8].status == "Degenerate");
  for (long m : {4, 6, 11, 13, 15, 19, 20}) {
    INFO("m = ", m);
    CHECK(recs[m].status == "BudgetExhausted");
    CHECK(recs[m].steps_used == 2000);
  }
  // periodic cases carry a unit with |norm| = 1
  CHECK(recs[5].unit_norm != "");
  CHECK((recs[5].unit_norm == "1" || recs[5].unit_norm == "-1"));
}

TEST_CASE("scan is deterministic and thread-count independent") {
  auto run = [](int threads) {
    std::vector<std::string> lines;
    scan_nth_roots(3, 2, 12, 500, [&](const ScanRecord& r) {
      ScanRecord c = r;
      c.wall_ms = 0;  // the only nondeterministic field
      lines.push_back(c.to_json().dump());
    }, threads);
    return lines;
  };
  auto a = run(1);
  auto b = run(4);
  CHECK(a == b);
}

TEST_CASE("skip predicate suppresses cases") {
  int emitted = 0;
  scan_nth_roots(3, 2, 10, 200, [&](const ScanRecord&) { ++emitted; }, 1, {},
                 [](const json& p) { return p.at("m").get<long>() % 2 == 0; });
  CHECK(emitted == 4);  // m = 3, 5, 7, 9
}

TEST_CASE("x^3 - x sweep") {
  std::map<long, ScanRecord> recs;
  conjecture_scan(2, 4, 2000, [&](const ScanRecord& r) {
    recs[r.params.at("x").get<long>()] = r;
  });
  REQUIRE(recs.size() == 3);
  for (auto& [x, r] : recs) {
    INFO("x = ", x);
    CHECK(r.params.at("m").get<long>() == x * x * x - x);
    CHECK(r.status == "BudgetExhausted");
  }
}
