#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "jpa/io.hpp"

using namespace jpa;

namespace {

struct TmpFile {
  std::string path;
  explicit TmpFile(const char* name) : path(std::string("/tmp/") + name) {
    std::remove(path.c_str());
  }
  ~TmpFile() { std::remove(path.c_str()); }
};

ScanRecord sample_record(long m) {
  ScanRecord r;
  r.kind = "nthroot";
  r.params = {{"n", 3}, {"m", m}, {"budget", 100}};
  r.status = "Periodic";
  r.l0 = 2;
  r.l1 = 3;
  r.steps_used = 9;
  r.digits = {{1, 2}, {3, 4}};
  r.unit_coeffs = {mpq_class(1, 2), 3};
  r.unit_norm = "-1";
  r.findings = {"note"};
  r.wall_ms = 5;
  return r;
}

}  // namespace

TEST_CASE("record JSON round-trip, including oversized integers") {
  ScanRecord r = sample_record(7);
  // a digit far beyond 64 bits must survive the trip exactly
  mpz_class big("123456789012345678901234567890123456789");
  r.digits.push_back({big, -big});
  ScanRecord back = ScanRecord::from_json(r.to_json());
  CHECK(back.kind == r.kind);
  CHECK(back.params == r.params);
  CHECK(back.status == r.status);
  CHECK(back.l0 == r.l0);
  CHECK(back.l1 == r.l1);
  CHECK(back.digits == r.digits);
  CHECK(back.unit_coeffs == r.unit_coeffs);
  CHECK(back.unit_norm == r.unit_norm);
  CHECK(back.findings == r.findings);

  // absent lengths stay absent
  ScanRecord s;
  s.kind = "expand";
  s.params = {{"poly", "-2,-2,1"}};
  s.status = "BudgetExhausted";
  ScanRecord sb = ScanRecord::from_json(s.to_json());
  CHECK(sb.l0 == -1);
  CHECK(sb.l1 == -1);
}

TEST_CASE("digit truncation at the configured limit") {
  ScanRecord r = sample_record(7);
  r.digits.clear();
  for (int i = 0; i < 30; ++i) r.digits.push_back({i});
  json j = r.to_json(10);
  ScanRecord back = ScanRecord::from_json(j);
  CHECK(back.digits.size() == 10);
  CHECK(back.digits_truncated);
  CHECK(back.steps_used == r.steps_used);
}

TEST_CASE("writer resume: dedupe across sessions") {
  TmpFile f("jpa_io_resume.jsonl");
  {
    JsonlWriter w(f.path, false);
    for (long m : {2, 3, 5}) w.write(sample_record(m));
  }
  {
    JsonlWriter w(f.path, true);
    CHECK(w.already_done(sample_record(3).params));
    CHECK_FALSE(w.already_done(sample_record(7).params));
    w.write(sample_record(3));  // silently skipped
    w.write(sample_record(7));
    w.write(sample_record(11));
    CHECK(w.skipped() == 1);
  }
  auto recs = read_jsonl(f.path);
  REQUIRE(recs.size() == 5);
  std::vector<long> ms;
  for (auto& r : recs) ms.push_back(r.params.at("m").get<long>());
  CHECK(ms == std::vector<long>{2, 3, 5, 7, 11});
}

TEST_CASE("partial final line is truncated on resume") {
  TmpFile f("jpa_io_partial.jsonl");
  {
    JsonlWriter w(f.path, false);
    w.write(sample_record(2));
    w.write(sample_record(3));
  }
  {
    // simulate a crash mid-write
    std::ofstream out(f.path, std::ios::app);
    out << "{\"kind\":\"nthroot\",\"params\":{\"m\":5";
  }
  {
    JsonlWriter w(f.path, true);
    CHECK(w.already_done(sample_record(2).params));
    CHECK_FALSE(w.already_done(sample_record(5).params));
    w.write(sample_record(5));
  }
  auto recs = read_jsonl(f.path);
  REQUIRE(recs.size() == 3);
  CHECK(recs[2].params.at("m").get<long>() == 5);
}

TEST_CASE("reader skips corrupt interior lines") {
  TmpFile f("jpa_io_corrupt.jsonl");
  {
    JsonlWriter w(f.path, false);
    w.write(sample_record(2));
  }
  {
    std::ofstream out(f.path, std::ios::app);
    out << "this is not json\n";
  }
  {
    std::ofstream out(f.path, std::ios::app);
    ScanRecord r = sample_record(3);
    out << r.to_json().dump() << "\n";
  }
  auto recs = read_jsonl(f.path);
  REQUIRE(recs.size() == 2);
  CHECK(recs[1].params.at("m").get<long>() == 3);
}
