#include "jpa/pureroot.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <condition_variable>
#include <map>
#include <optional>
#include <mutex>
#include <thread>

namespace jpa {

namespace {

// Smallest d | n, d > 1, with m an exact d-th power; 0 if none. Checking prime
// divisors of n would suffice, but n is tiny so all divisors are cheap.
int degenerate_power(long m, int n) {
  mpz_class mm(m), r;
  for (int d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    if (mpz_root(r.get_mpz_t(), mm.get_mpz_t(), d) != 0) return d;
  }
  return 0;
}

long now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

ScanRecord run_case(const std::string& kind, const json& params, long m, int n, long budget,
                    const ExpandLimits& limits) {
  ScanRecord rec;
  rec.kind = kind;
  rec.params = params;
  long t0 = now_ms();
  if (int d = degenerate_power(m, n)) {
    rec.status = "Degenerate";
    rec.findings.push_back("skipped: omega would have degree < n (m is a perfect " +
                           std::to_string(d) + "-th power)");
    rec.wall_ms = now_ms() - t0;
    return rec;
  }
  try {
    auto [prc, a0] = pure_root_alpha0(m, n);
    ExpansionOutcome out = expand(a0, budget, limits);
    fill_from_outcome(rec, out, /*with_unit=*/true);
  } catch (const ResourceLimitError& e) {
    rec.status = "ResourceLimit";
    rec.findings.push_back(e.what());
  } catch (const ZeroDivisorError& e) {
    rec.status = "ZeroDivisor";
    rec.findings.push_back(std::string(e.what()) + "; factor witness " +
                           format_intpoly(e.witness));
  }
  rec.wall_ms = now_ms() - t0;
  return rec;
}

// Runs jobs[0..N) on `threads` workers, hands results to sink in index order.
// A job may return nullopt (case skipped): nothing is emitted for it.
void ordered_parallel(size_t count, int threads,
                      const std::function<std::optional<ScanRecord>(size_t)>& job,
                      const RecordSink& sink) {
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i)
      if (auto r = job(i)) sink(*r);
    return;
  }
  std::mutex mu;
  std::condition_variable cv;
  std::map<size_t, std::optional<ScanRecord>> ready;
  size_t next_claim = 0, next_emit = 0;
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      size_t i;
      {
        std::lock_guard lk(mu);
        if (next_claim >= count || err) return;
        i = next_claim++;
      }
      try {
        std::optional<ScanRecord> r = job(i);
        std::lock_guard lk(mu);
        ready.emplace(i, std::move(r));
      } catch (...) {
        std::lock_guard lk(mu);
        if (!err) err = std::current_exception();
      }
      cv.notify_one();
    }
  };
  std::vector<std::thread> pool;
  int nthreads = std::min<size_t>(threads, count);
  pool.reserve(nthreads);
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  {
    std::unique_lock lk(mu);
    while (next_emit < count) {
      cv.wait(lk, [&] { return err || ready.count(next_emit); });
      if (err) break;
      std::optional<ScanRecord> r = std::move(ready.at(next_emit));
      ready.erase(next_emit);
      ++next_emit;
      if (r) {
        lk.unlock();
        sink(*r);  // single-threaded writer
        lk.lock();
      }
    }
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace

bool is_degenerate_radicand(long m, int n) { return degenerate_power(m, n) != 0; }

std::pair<PureRootCase, std::vector<FieldElem>> pure_root_alpha0(long m, int n) {
  if (m < 2 || n < 2) throw std::invalid_argument("pure_root_alpha0: need m >= 2, n >= 2");
  if (int d = degenerate_power(m, n))
    throw DegenerateCaseError("pure_root_alpha0: m = " + std::to_string(m) +
                              " is a perfect " + std::to_string(d) + "-th power");
  // X^n - m; a_{n-1} = 0 fails the steep-shape test, so use positive_root mode.
  std::vector<mpz_class> cs(n + 1, 0);
  cs[0] = -mpz_class(m);
  cs[n] = 1;
  PureRootCase prc{m, n, field_new(IntPoly(cs), NumberField::Mode::positive_root)};
  std::vector<FieldElem> a0;
  FieldElem w = FieldElem::omega(prc.field);
  FieldElem p = w;
  for (int i = 1; i < n; ++i) {
    a0.push_back(p);
    p = p * w;
  }
  return {prc, std::move(a0)};
}

void scan_nth_roots(int n, long m_from, long m_to, long budget, const RecordSink& sink,
                    int threads, const ExpandLimits& limits, const SkipCheck& skip) {
  if (m_from > m_to) throw std::invalid_argument("scan_nth_roots: empty range");
  if (budget < 1) throw std::invalid_argument("scan_nth_roots: budget >= 1 required");
  size_t count = static_cast<size_t>(m_to - m_from + 1);
  ordered_parallel(count, threads, [&](size_t i) -> std::optional<ScanRecord> {
    long m = m_from + static_cast<long>(i);
    json params = {{"n", n}, {"m", m}, {"budget", budget}};
    if (skip && skip(params)) return std::nullopt;
    return run_case("nthroot", params, m, n, budget, limits);
  }, sink);
}

void conjecture_scan(long x_from, long x_to, long budget, const RecordSink& sink,
                     int threads, const ExpandLimits& limits, const SkipCheck& skip) {
  if (x_from < 2) throw std::invalid_argument("conjecture_scan: x_from >= 2 required");
  if (x_from > x_to) throw std::invalid_argument("conjecture_scan: empty range");
  size_t count = static_cast<size_t>(x_to - x_from + 1);
  ordered_parallel(count, threads, [&](size_t i) -> std::optional<ScanRecord> {
    long x = x_from + static_cast<long>(i);
    long m = x * x * x - x;
    json params = {{"x", x}, {"m", m}, {"budget", budget}};
    if (skip && skip(params)) return std::nullopt;
    return run_case("conjecture", params, m, 3, budget, limits);
  }, sink);
}

}  // namespace jpa
