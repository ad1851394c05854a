#include "jpa/jpa.hpp"

#include <unordered_map>

namespace jpa {

std::string JpaState::key() const {
  std::string out;
  for (const auto& a : alphas) {
    out += a.key();
    out += ';';
  }
  return out;
}

JpaStep jpa_step(const JpaState& s) {
  if (s.alphas.empty()) throw std::invalid_argument("jpa_step: empty state");
  size_t k = s.alphas.size();
  JpaStep r;
  r.digits.reserve(k);
  std::vector<FieldElem> frac;
  frac.reserve(k);
  for (const auto& a : s.alphas) {
    mpz_class d = a.floor();
    frac.push_back(a - mpq_class(d));
    r.digits.push_back(std::move(d));
  }
  if (frac[0].is_zero()) return r;  // alpha_1 = a_1: the map is undefined
  FieldElem inv = frac[0].inv();
  JpaState next;
  next.alphas.reserve(k);
  for (size_t i = 1; i < k; ++i) next.alphas.push_back(frac[i] * inv);
  next.alphas.push_back(inv);
  r.next = std::move(next);
  return r;
}

namespace {
void check_bits(const JpaState& s, size_t limit) {
  for (const auto& a : s.alphas)
    if (a.max_bits() > limit)
      throw ResourceLimitError("expand: coefficient bit-size guard exceeded (" +
                               std::to_string(limit) + " bits)");
}
}  // namespace

ExpansionOutcome expand(const std::vector<FieldElem>& alpha0, long budget,
                        const ExpandLimits& limits) {
  if (budget < 1) throw std::invalid_argument("expand: budget >= 1 required");
  ExpansionOutcome out;
  std::vector<JpaState> states;
  std::unordered_map<std::string, long> seen;
  JpaState cur{alpha0};
  states.push_back(cur);
  seen[cur.key()] = 0;
  for (long nu = 0; nu < budget; ++nu) {
    JpaStep st = jpa_step(states.back());
    out.digits.push_back(st.digits);
    out.steps_used = nu + 1;
    if (!st.next) {
      out.status = ExpansionStatus::Terminated;
      return out;
    }
    check_bits(*st.next, limits.bit_limit);
    auto [it, inserted] = seen.try_emplace(st.next->key(), nu + 1);
    if (!inserted) {
      long mu = it->second;
      out.l0 = mu;
      out.l1 = nu + 1 - mu;
      out.status = mu == 0 ? ExpansionStatus::PurelyPeriodic : ExpansionStatus::Periodic;
      out.digits.resize(out.l0 + out.l1);
      out.period_states.assign(states.begin() + mu, states.begin() + mu + out.l1);
      return out;
    }
    states.push_back(std::move(*st.next));
  }
  out.status = ExpansionStatus::BudgetExhausted;
  return out;
}

FieldElem hasse_bernstein_unit(const ExpansionOutcome& out) {
  if (!out.periodic())
    throw std::invalid_argument("hasse_bernstein_unit: expansion is not periodic");
  const auto& states = out.period_states;
  FieldElem eps = FieldElem::from_rational(states[0].alphas[0].field(), 1);
  for (const auto& s : states) eps = eps * s.alphas.back();
  return eps;
}

const char* status_name(ExpansionStatus s) {
  switch (s) {
    case ExpansionStatus::PurelyPeriodic: return "PurelyPeriodic";
    case ExpansionStatus::Periodic: return "Periodic";
    case ExpansionStatus::Terminated: return "Terminated";
    case ExpansionStatus::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

}  // namespace jpa
