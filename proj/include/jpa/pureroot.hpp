#pragma once

#include <functional>

#include "jpa/io.hpp"
#include "jpa/jpa.hpp"

namespace jpa {

// Q(m^{1/n}) with starting vector (m^{1/n}, ..., m^{(n-1)/n}).
struct PureRootCase {
  long m = 0;
  int n = 0;
  FieldPtr field;  // X^n - m, positive_root mode
};

// Distinguished rejection for m with a lower-degree omega (m = k^d, d | n, d > 1).
class DegenerateCaseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// True iff m = k^d for some d | n with d > 1 (exact integer root test).
bool is_degenerate_radicand(long m, int n);

std::pair<PureRootCase, std::vector<FieldElem>> pure_root_alpha0(long m, int n);

// One record per m in [m_from, m_to]; degenerate m get a skip record, bit-guard
// trips become per-m ResourceLimit records. Emission is in ascending m.
// `skip` (e.g. a resume check against already-persisted params) suppresses the
// whole computation for a case.
using RecordSink = std::function<void(const ScanRecord&)>;
using SkipCheck = std::function<bool(const json&)>;
void scan_nth_roots(int n, long m_from, long m_to, long budget, const RecordSink& sink,
                    int threads = 1, const ExpandLimits& limits = {},
                    const SkipCheck& skip = {});

// The m = x^3 - x sweep with the cubic pair (m^{1/3}, m^{2/3}).
void conjecture_scan(long x_from, long x_to, long budget, const RecordSink& sink,
                     int threads = 1, const ExpandLimits& limits = {},
                     const SkipCheck& skip = {});

}  // namespace jpa
