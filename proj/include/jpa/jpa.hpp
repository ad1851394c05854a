#pragma once

#include <optional>
#include <vector>

#include "jpa/field.hpp"

namespace jpa {

// State alpha^(nu) = (alpha_1, ..., alpha_{n-1}), all in one field.
struct JpaState {
  std::vector<FieldElem> alphas;
  std::string key() const;
  bool operator==(const JpaState& o) const { return alphas == o.alphas; }
};

struct JpaStep {
  std::vector<mpz_class> digits;  // floor of each coordinate
  std::optional<JpaState> next;   // empty when the step terminates (alpha_1 = a_1)
};

// One application of the floor-and-invert map. Exact; throws ZeroDivisorError
// if the quotient ring shows a zero divisor.
JpaStep jpa_step(const JpaState& s);

enum class ExpansionStatus { PurelyPeriodic, Periodic, Terminated, BudgetExhausted };

struct ExpansionOutcome {
  ExpansionStatus status = ExpansionStatus::BudgetExhausted;
  long l0 = 0;  // preperiod length (periodic only)
  long l1 = 0;  // period length (periodic only)
  long steps_used = 0;
  std::vector<std::vector<mpz_class>> digits;  // nu < l0+l1 when periodic
  std::vector<JpaState> period_states;         // states l0 .. l0+l1-1
  bool periodic() const {
    return status == ExpansionStatus::PurelyPeriodic || status == ExpansionStatus::Periodic;
  }
};

struct ExpandLimits {
  size_t bit_limit = 1000000;  // per-coefficient size guard; JPA_BIT_LIMIT overrides in the CLI
};

// Iterates jpa_step with exact full-state cycle detection (first revisit gives
// minimal l0, l1). Throws ResourceLimitError when the bit guard trips.
ExpansionOutcome expand(const std::vector<FieldElem>& alpha0, long budget,
                        const ExpandLimits& limits = {});

// epsilon = prod of the last coordinate over one period, exactly.
FieldElem hasse_bernstein_unit(const ExpansionOutcome& out);

const char* status_name(ExpansionStatus s);

}  // namespace jpa
