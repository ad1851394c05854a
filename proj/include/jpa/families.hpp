#pragma once

#include <string>
#include <vector>

#include "jpa/jpa.hpp"

namespace jpa {

// Parameters (n, m, t, c0..c_{n-1}) of the period-m family.
struct FamilyParams {
  int n = 0;
  int m = 0;
  mpz_class t = 1;
  std::vector<mpz_class> c;

  enum class Mode { base, scaled };
  // base: c_{n-1} >= c_0 = 1, c_{n-1} >= ... >= c_1 >= 0, m >= n >= 2, t >= 1.
  // scaled: same shape but c_0 > 1 and c_0 | c_i for all i.
  Mode mode() const;
  void validate() const;  // throws std::invalid_argument
};

// The n coupled sequences u_{i,k}, Kronecker-delta initial block, common
// characteristic coefficients c_0..c_{n-1}.
struct RecurrenceTable {
  int n = 0;
  std::vector<std::vector<mpz_class>> u;  // u[i][k], 0 <= k <= M
  const mpz_class& at(int i, int k) const { return u[i][k]; }
};

RecurrenceTable recurrence_table(const std::vector<mpz_class>& c, int n, int M);

// f(X) = X^n - (u_{n-1,m} t + c_{n-1}) X^{n-1} - ... - (u_{0,m} t + c_0)
IntPoly family_poly(const FamilyParams& p);
FieldPtr family_field(const FamilyParams& p);

enum class Alpha0Form { sum, complement };
// sum:     alpha_i = sum_{j=0}^{i} (u_{j,m} t + c_j) omega^{j-i}
// complement: alpha_i = omega^{n-i} - sum_{j=i+1}^{n-1} (u_{j,m} t + c_j) omega^{j-i}
// The two are equal element-wise (f(omega) = 0).
std::vector<FieldElem> alpha0(const FamilyParams& p, const FieldPtr& F,
                              Alpha0Form form = Alpha0Form::sum);

// The predicted period-m digit table, rows nu = 0 .. m-1.
std::vector<std::vector<mpz_class>> expected_digit_cycle(const FamilyParams& p);

// epsilon = u_{n-1,m} omega^{n-1} + ... + u_{0,m}
FieldElem expected_unit(const FamilyParams& p, const FieldPtr& F);

// Closed form for alpha^(nu), 1 <= nu <= m-1; engine cross-check oracle.
std::vector<FieldElem> closed_form_state(const FamilyParams& p, const FieldPtr& F, int nu);

struct VerificationReport {
  FamilyParams params;
  bool pass = false;
  ExpansionStatus status = ExpansionStatus::BudgetExhausted;
  long l0 = 0, l1 = 0;
  bool digits_ok = false, unit_ok = false, norm_ok = false, closed_forms_ok = false;
  mpq_class unit_norm;
  std::vector<mpq_class> unit_coeffs;
  std::vector<std::vector<mpz_class>> digits;
  std::string first_divergence;        // empty when pass
  std::vector<std::string> findings;   // recorded, never asserted
};

// Base mode: asserts pure periodicity with l1 = m, the digit table, the
// closed forms for all nu, the unit closed form and |norm| = 1.
// Scaled mode: asserts l0 = 0 and l1 = lcm(m, n); the repetition pattern is
// recorded as a finding only.
VerificationReport verify_family(const FamilyParams& p, long budget = 0);

struct OracleCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};
struct OracleReport {
  std::vector<OracleCheck> checks;
  bool all_pass() const;
};

// Executable identities/inequalities for the recurrence sequences, checked
// over the whole table range, including the sharpness witness for the last one.
OracleReport recurrence_oracles(const std::vector<mpz_class>& c, int n, int M);

// All parameter tuples with n in [2, n_max], m in [n, n+m_span], t in t_list,
// c_0 = 1 and a monotone chain c_{n-1} >= ... >= c_1 >= 0, c_{n-1} <= c_max.
std::vector<FamilyParams> grid_cases(int n_max = 5, int m_span = 5,
                                     const std::vector<mpz_class>& t_list = {1, 2, 7},
                                     int c_max = 3);

}  // namespace jpa
