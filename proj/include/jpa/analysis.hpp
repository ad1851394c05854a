#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jpa/poly.hpp"

namespace jpa {

// Exact root counts of the squarefree part of p with respect to |z| = 1.
struct UnitDiskCount {
  int inside = 0;
  int on_circle = 0;
};
UnitDiskCount unit_disk_count(const IntPoly& p);

enum class PisotVerdict { Yes, No, Boundary };
struct PisotResult {
  PisotVerdict verdict = PisotVerdict::Boundary;
  std::string note;
};
const char* pisot_name(PisotVerdict v);

// f monic with a real root > 1 (throws std::invalid_argument otherwise).
// Yes/No are exact; Boundary covers on-circle roots and the case where extra
// outside-disk roots cannot be attributed because irreducibility is Unknown.
PisotResult is_pisot(const IntPoly& f);

struct NegativeRootReport {
  std::vector<Interval> negative_roots;       // of f, isolated + refined
  std::optional<Interval> bound_root;         // negative root of x^{n-1}+x^{n-2}+1
  bool all_above_bound = true;                // vacuous when bound_root absent
  bool has_root_below_minus1 = false;
  std::vector<std::string> findings;
};
// Empirical observation checker; violations become findings, never throws.
NegativeRootReport negative_root_bound_check(const IntPoly& f, int n);

struct DiscSample {
  long m = 0;
  mpz_class t;
  IntPoly f;
  mpz_class disc;
  bool matches = false;  // (disc < 0) == criterion
};
struct DiscCriterionReport {
  mpz_class c1, c2;
  bool criterion = false;  // c2 >= ceil(c1^2 / 4)
  std::vector<DiscSample> samples;
  bool all_match = true;
  std::vector<std::string> findings;
};
// Exact discriminant sign of the cubic family polynomial versus the closed
// criterion, over sampled (m, t).
DiscCriterionReport cubic_disc_criterion(const mpz_class& c1, const mpz_class& c2,
                                         const std::vector<mpz_class>& t_samples,
                                         const std::vector<long>& m_samples = {3, 4, 5,
                                                                               6, 7, 8});

// One drawn polynomial X^n - a_{n-1}X^{n-1} - ... - a_0 with
// a_{n-1} >= ... >= a_1 >= 0, a_{n-1} >= a_0 >= 1, entries <= cap.
struct SamplerReport {
  int n = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  long cap = 0;
  long irreducible = 0;
  long reducible_matched = 0;   // explained by a permitted cyclotomic divisor
  long case_a = 0, case_b = 0, case_c = 0;  // non-exclusive tallies
  long unknown = 0;
  std::vector<std::string> counterexamples;  // reducible, unexplained
  double unknown_rate() const { return samples ? double(unknown) / samples : 0.0; }
};
SamplerReport conjecture1_sample(int n, long samples, std::uint64_t seed, long cap = 20);

struct RootReport {
  IntPoly poly;
  IntPoly squarefree;
  bool had_multiple_roots = false;
  int inside = 0, on_circle = 0, outside = 0;  // of the squarefree part
  std::optional<Interval> dominant_root;       // rightmost real root
  std::optional<PisotResult> pisot;            // absent if precondition fails
  std::vector<Interval> negative_real_roots;
  std::optional<Interval> max_nonreal_modulus;
  std::string modulus_kind;  // "exact-symmetric" or "coarse-bound"
  std::vector<int> cyclotomic_divisors;
  IrreducibilityVerdict irreducibility;
  std::vector<std::string> findings;
};
RootReport analyze(const IntPoly& p);

}  // namespace jpa
