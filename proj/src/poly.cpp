#include "jpa/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

namespace jpa {

// ---------------------------------------------------------------- IntPoly

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::x_power(int k) {
  std::vector<mpz_class> c(k + 1, 0);
  c[k] = 1;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::constant(const mpz_class& v) { return IntPoly({v}); }

const mpz_class& IntPoly::lc() const {
  if (c_.empty()) throw std::domain_error("lc of zero polynomial");
  return c_.back();
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

int IntPoly::sign_at(const mpq_class& x) const {
  // sign of sum c_i p^i q^(d-i), integer Horner; avoids rational reduction
  if (c_.empty()) return 0;
  const mpz_class& p = x.get_num();
  const mpz_class& q = x.get_den();
  mpz_class r = c_.back();
  mpz_class qk = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    qk *= q;
    r = r * p + c_[i] * qk;
  }
  return sgn(r);
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    mpz_class a = c_[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    mpz_class mag = abs(a);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << "X";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.degree(), b.degree()) + 1, 0);
  for (int i = 0; i <= a.degree(); ++i) c[i] += a[i];
  for (int i = 0; i <= b.degree(); ++i) c[i] += b[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.degree(), b.degree()) + 1, 0);
  for (int i = 0; i <= a.degree(); ++i) c[i] += a[i];
  for (int i = 0; i <= b.degree(); ++i) c[i] -= b[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> c(a.degree() + b.degree() + 1, 0);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) c[i + j] += a[i] * b[j];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a) { return IntPoly() - a; }

IntPoly operator*(const mpz_class& s, const IntPoly& a) {
  std::vector<mpz_class> c(a.coeffs());
  for (auto& x : c) x *= s;
  return IntPoly(std::move(c));
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() <= 0) return IntPoly();
  std::vector<mpz_class> c(p.degree());
  for (int i = 1; i <= p.degree(); ++i) c[i - 1] = i * p[i];
  return IntPoly(std::move(c));
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& x : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  std::vector<mpz_class> c(p.coeffs());
  for (auto& x : c) x /= g;
  return IntPoly(std::move(c));
}

IntPoly reciprocal(const IntPoly& p) {
  std::vector<mpz_class> c(p.coeffs());
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) throw std::domain_error("exact_div: not divisible");
  std::vector<mpz_class> rem(a.coeffs());
  std::vector<mpz_class> q(a.degree() - b.degree() + 1, 0);
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    mpz_class t = rem[i + b.degree()];
    if (t == 0) continue;
    mpz_class qi, r;
    mpz_tdiv_qr(qi.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), b.lc().get_mpz_t());
    if (r != 0) throw std::domain_error("exact_div: not divisible");
    q[i] = qi;
    for (int j = 0; j <= b.degree(); ++j) rem[i + j] -= qi * b[j];
  }
  for (const auto& x : rem)
    if (x != 0) throw std::domain_error("exact_div: not divisible");
  return IntPoly(std::move(q));
}

bool divides(const IntPoly& b, const IntPoly& a) {
  try {
    (void)exact_div(a, b);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

// ---------------------------------------------------------------- RatPoly

void RatPoly::normalize() {
  for (auto& x : c_) x.canonicalize();
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly::RatPoly(const IntPoly& p) {
  c_.reserve(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) c_.emplace_back(p[i]);
}

const mpq_class& RatPoly::lc() const {
  if (c_.empty()) throw std::domain_error("lc of zero polynomial");
  return c_.back();
}

mpq_class RatPoly::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

std::pair<IntPoly, mpz_class> RatPoly::clear_denominators() const {
  mpz_class d = 1;
  for (const auto& x : c_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> c;
  c.reserve(c_.size());
  for (const auto& x : c_) {
    mpq_class v = x * d;
    c.push_back(v.get_num());
  }
  return {IntPoly(std::move(c)), d};
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<mpq_class> c(std::max(a.degree(), b.degree()) + 1, 0);
  for (int i = 0; i <= a.degree(); ++i) c[i] += a[i];
  for (int i = 0; i <= b.degree(); ++i) c[i] += b[i];
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<mpq_class> c(std::max(a.degree(), b.degree()) + 1, 0);
  for (int i = 0; i <= a.degree(); ++i) c[i] += a[i];
  for (int i = 0; i <= b.degree(); ++i) c[i] -= b[i];
  return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<mpq_class> c(a.degree() + b.degree() + 1, 0);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) c[i + j] += a[i] * b[j];
  return RatPoly(std::move(c));
}

RatPoly operator*(const mpq_class& s, const RatPoly& a) {
  std::vector<mpq_class> c(a.coeffs());
  for (auto& x : c) x *= s;
  return RatPoly(std::move(c));
}

RatPoly derivative(const RatPoly& p) {
  if (p.degree() <= 0) return RatPoly();
  std::vector<mpq_class> c(p.degree());
  for (int i = 1; i <= p.degree(); ++i) c[i - 1] = i * p[i];
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<mpq_class> rem(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<mpq_class> q(a.degree() - db + 1, 0);
  for (int i = a.degree() - db; i >= 0; --i) {
    mpq_class qi = rem[i + db] / b.lc();
    if (qi == 0) continue;
    q[i] = qi;
    for (int j = 0; j <= db; ++j) rem[i + j] -= qi * b[j];
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly f = a, g = b;
  while (!g.is_zero()) {
    RatPoly r = divmod(f, g).second;
    f = g;
    g = r;
  }
  if (f.is_zero()) return f;
  return (mpq_class(1) / f.lc()) * f;
}

ExtGcd ext_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0({mpq_class(1)}), s1, t0, t1({mpq_class(1)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = s0 - q * s1, t = t0 - q * t1;
    r0 = r1; r1 = r;
    s0 = s1; s1 = s;
    t0 = t1; t1 = t;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  mpq_class inv = mpq_class(1) / r0.lc();
  return {inv * r0, inv * s0, inv * t0};
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  RatPoly g = gcd(RatPoly(a), RatPoly(b));
  if (g.is_zero()) return IntPoly();
  IntPoly p = primitive_part(g.clear_denominators().first);
  if (p.lc() < 0) p = mpz_class(-1) * p;
  return p;
}

// ------------------------------------------------------------- resultant

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z[X].
IntPoly prem(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  int db = b.degree();
  int e = a.degree() - db + 1;
  const mpz_class& d = b.lc();
  while (!r.is_zero() && r.degree() >= db) {
    IntPoly shift = IntPoly::x_power(r.degree() - db);
    r = d * r - r.lc() * (shift * b);
    --e;
  }
  if (e > 0) r = pow_z(d, e) * r;
  return r;
}

}  // namespace

// Subresultant PRS resultant (Cohen, "A Course in Computational Algebraic
// Number Theory", alg. 3.3.7).
mpz_class resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of zero polynomial");
  IntPoly A = p, B = q;
  int s1 = 1;
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1) && (B.degree() & 1)) s1 = -s1;
    std::swap(A, B);
  }
  if (B.degree() == 0) {
    // Res(A, const) = const^deg A  (and Res of two constants is 1)
    return s1 * pow_z(B.lc(), A.degree());
  }
  mpz_class a = content(A), b = content(B);
  A = exact_div(A, IntPoly::constant(a));
  B = exact_div(B, IntPoly::constant(b));
  mpz_class g = 1, h = 1;
  mpz_class t = pow_z(a, B.degree()) * pow_z(b, A.degree());
  int s = 1;
  while (true) {
    int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    IntPoly R = prem(A, B);
    A = B;
    mpz_class divisor = g * pow_z(h, delta);
    B = R.is_zero() ? R : exact_div(R, IntPoly::constant(divisor));
    g = A.lc();
    if (delta > 0) {
      // h = g^delta / h^(delta-1), exact in Z
      mpz_class num = pow_z(g, delta);
      h = num / pow_z(h, delta - 1);
    }
    if (B.is_zero()) return 0;
    if (B.degree() == 0) {
      mpz_class res = pow_z(B.lc(), A.degree()) / pow_z(h, A.degree() - 1);
      return s1 * s * t * res;
    }
  }
}

mpz_class discriminant_resultant(const IntPoly& p) { return resultant(p, derivative(p)); }

// -------------------------------------------------------------- Interval

Interval::Interval(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
}

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo + b.lo, a.hi + b.hi); }
Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo - b.hi, a.hi - b.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  mpq_class p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  mpq_class lo = std::min(std::min(p1, p2), std::min(p3, p4));
  mpq_class hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return Interval(std::move(lo), std::move(hi));
}

Interval eval_interval(const IntPoly& p, const Interval& x) {
  Interval r(mpq_class(0), mpq_class(0));
  for (int i = p.degree(); i >= 0; --i) {
    r = r * x;
    Interval ci{mpq_class(p[i]), mpq_class(p[i])};
    r = r + ci;
  }
  return r;
}

Interval eval_interval(const RatPoly& p, const Interval& x) {
  Interval r(mpq_class(0), mpq_class(0));
  for (int i = p.degree(); i >= 0; --i) {
    r = r * x;
    Interval ci{p[i], p[i]};
    r = r + ci;
  }
  return r;
}

// ----------------------------------------------------------- Sturm chains

std::vector<RatPoly> signed_remainder_chain(RatPoly f0, RatPoly f1) {
  std::vector<RatPoly> chain;
  chain.push_back(std::move(f0));
  if (!f1.is_zero()) chain.push_back(std::move(f1));
  while (chain.size() >= 2) {
    const RatPoly& a = chain[chain.size() - 2];
    const RatPoly& b = chain.back();
    RatPoly r = divmod(a, b).second;
    if (r.is_zero()) break;
    chain.push_back(mpq_class(-1) * r);
  }
  return chain;
}

std::vector<RatPoly> sturm_chain(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("sturm_chain of zero polynomial");
  RatPoly f(p);
  RatPoly g = gcd(f, derivative(f));
  RatPoly sf = g.degree() > 0 ? divmod(f, g).first : f;
  return signed_remainder_chain(sf, derivative(sf));
}

int variations_at(const std::vector<RatPoly>& chain, const mpq_class& x) {
  int var = 0, last = 0;
  for (const auto& f : chain) {
    auto [A, d] = f.clear_denominators();
    int s = A.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

int variations_at_inf(const std::vector<RatPoly>& chain, int dir) {
  int var = 0, last = 0;
  for (const auto& f : chain) {
    if (f.is_zero()) continue;
    int s = sgn(f.lc());
    if (dir < 0 && (f.degree() & 1)) s = -s;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

int count_real_roots(const IntPoly& p, const Interval& I) {
  auto chain = sturm_chain(p);
  return variations_at(chain, I.lo) - variations_at(chain, I.hi);
}

int count_real_roots_total(const IntPoly& p) {
  auto chain = sturm_chain(p);
  return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

int count_positive_real_roots(const IntPoly& p) {
  auto chain = sturm_chain(p);
  return variations_at(chain, 0) - variations_at_inf(chain, +1);
}

mpq_class root_bound(const IntPoly& p) {
  if (p.degree() < 0) throw std::domain_error("root_bound of zero polynomial");
  mpq_class m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    mpq_class v = abs(mpq_class(p[i], p.lc()));
    if (v > m) m = v;
  }
  return m + 1;
}

bool steep_shape_ok(const IntPoly& p) {
  int n = p.degree();
  if (n < 2 || !p.is_monic()) return false;
  // coefficients a_i = -p[i]
  std::vector<mpz_class> a(n);
  for (int i = 0; i < n; ++i) a[i] = -p[i];
  if (a[n - 1] < 1) return false;
  if (a[0] <= 0 || a[n - 1] < a[0]) return false;
  for (int i = 1; i + 1 < n; ++i)
    if (a[i] < 0 || a[i + 1] < a[i]) return false;
  return true;
}

Interval isolate_dominant_root(const IntPoly& p, IsolationMode mode) {
  if (mode == IsolationMode::steep) {
    if (!steep_shape_ok(p))
      throw std::invalid_argument("isolate_dominant_root: coefficient shape violation");
    mpz_class an1 = -p[p.degree() - 1];
    return Interval(mpq_class(an1), mpq_class(an1 + 1));
  }
  // positive_root: unique positive real root of a monic polynomial
  if (!p.is_monic()) throw std::invalid_argument("isolate_dominant_root: polynomial must be monic");
  if (count_positive_real_roots(p) != 1)
    throw std::invalid_argument("isolate_dominant_root: no unique positive real root");
  mpq_class lo = 0, hi = root_bound(p);
  if (p.sign_at(lo) == 0)
    throw std::invalid_argument("isolate_dominant_root: zero constant term");
  // shrink until the bracket has a sign change, contains only the one root,
  // and is at most unit-wide (comparable to the steep-shape bracket)
  while (p.sign_at(lo) * p.sign_at(hi) > 0 || count_real_roots(p, Interval(lo, hi)) != 1 ||
         hi - lo > 1) {
    mpq_class mid = (lo + hi) / 2;
    int sm = p.sign_at(mid);
    if (sm == 0) throw std::invalid_argument("isolate_dominant_root: rational root");
    if (count_real_roots(p, Interval(mid, hi)) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return Interval(lo, hi);
}

Interval refine_root(const IntPoly& p, Interval I, const mpq_class& eps) {
  int slo = p.sign_at(I.lo), shi = p.sign_at(I.hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::invalid_argument("refine_root: endpoints must bracket a simple root");
  while (I.width() >= eps) {
    mpq_class mid = I.mid();
    int sm = p.sign_at(mid);
    if (sm == 0) {
      // rational root hit exactly; collapse onto it
      return Interval(mid, mid);
    }
    if (sm == slo)
      I.lo = mid;
    else
      I.hi = mid;
  }
  return I;
}

std::vector<Interval> isolate_real_roots(const IntPoly& p, Interval range) {
  std::vector<Interval> out;
  auto chain = sturm_chain(p);
  auto count = [&](const Interval& I) {
    return variations_at(chain, I.lo) - variations_at(chain, I.hi);
  };
  std::vector<Interval> work{range};
  while (!work.empty()) {
    Interval I = work.back();
    work.pop_back();
    int k = count(I);
    if (k == 0) continue;
    if (k == 1 && p.sign_at(I.lo) != 0 && p.sign_at(I.lo) * p.sign_at(I.hi) < 0) {
      out.push_back(I);
      continue;
    }
    mpq_class mid = I.mid();
    if (p.sign_at(mid) == 0) {
      out.push_back(Interval(mid, mid));
      // exclude the root point from both halves
      mpq_class delta = I.width() / 4;
      while (count_real_roots(p, Interval(mid - delta, mid)) +
                 count_real_roots(p, Interval(mid, mid + delta)) >
             1)
        delta /= 2;
      work.push_back(Interval(I.lo, mid - delta));
      work.push_back(Interval(mid + delta, I.hi));
    } else {
      work.push_back(Interval(I.lo, mid));
      work.push_back(Interval(mid, I.hi));
    }
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

// ------------------------------------------------------------ cyclotomic

IntPoly cyclotomic_poly(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_poly: m >= 1 required");
  static std::map<int, IntPoly> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<mpz_class> xm(m + 1, 0);
  xm[0] = -1;
  xm[m] = 1;
  IntPoly phi(std::move(xm));  // X^m - 1
  for (int d = 1; d < m; ++d)
    if (m % d == 0) phi = exact_div(phi, cyclotomic_poly(d));
  cache[m] = phi;
  return phi;
}

// --------------------------------------------------------- irreducibility

namespace {

// Dense polynomial arithmetic over F_p, word-sized p.
struct ModPoly {
  std::vector<uint64_t> c;
  void norm() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int deg() const { return static_cast<int>(c.size()) - 1; }
};

ModPoly mod_reduce(const IntPoly& p, uint64_t pr) {
  ModPoly r;
  r.c.resize(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) {
    mpz_class m = p[i] % static_cast<long>(pr);
    if (m < 0) m += static_cast<long>(pr);
    r.c[i] = m.get_ui();
  }
  r.norm();
  return r;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, uint64_t p) {
  if (a.c.empty() || b.c.empty()) return {};
  ModPoly r;
  r.c.assign(a.deg() + b.deg() + 1, 0);
  for (int i = 0; i <= a.deg(); ++i)
    for (int j = 0; j <= b.deg(); ++j)
      r.c[i + j] = (r.c[i + j] + (__uint128_t)a.c[i] * b.c[j]) % p;
  r.norm();
  return r;
}

uint64_t mod_inv(uint64_t a, uint64_t p) {
  // extended euclid
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a % p);
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, uint64_t p) {
  uint64_t inv = mod_inv(b.c.back(), p);
  while (a.deg() >= b.deg() && !a.c.empty()) {
    uint64_t f = (__uint128_t)a.c.back() % p * inv % p;
    int shift = a.deg() - b.deg();
    for (int i = 0; i <= b.deg(); ++i) {
      uint64_t sub = (__uint128_t)f * b.c[i] % p;
      uint64_t& t = a.c[i + shift];
      t = (t + p - sub) % p;
    }
    a.norm();
  }
  return a;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, uint64_t p) {
  while (!b.c.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = b;
    b = r;
  }
  if (!a.c.empty()) {
    uint64_t inv = mod_inv(a.c.back(), p);
    for (auto& x : a.c) x = (__uint128_t)x * inv % p;
  }
  return a;
}

ModPoly mod_powmod(const ModPoly& base, uint64_t e, const ModPoly& m, uint64_t p) {
  ModPoly r{{1}};
  ModPoly b = mod_rem(base, m, p);
  while (e) {
    if (e & 1) r = mod_rem(mod_mul(r, b, p), m, p);
    b = mod_rem(mod_mul(b, b, p), m, p);
    e >>= 1;
  }
  return r;
}

ModPoly mod_exact_div(const ModPoly& a, const ModPoly& b, uint64_t p) {
  // a / b assuming exact; quotient via repeated reduction
  ModPoly q;
  q.c.assign(a.deg() - b.deg() + 1, 0);
  ModPoly rem = a;
  uint64_t inv = mod_inv(b.c.back(), p);
  while (rem.deg() >= b.deg() && !rem.c.empty()) {
    uint64_t f = (__uint128_t)rem.c.back() * inv % p;
    int shift = rem.deg() - b.deg();
    q.c[shift] = f;
    for (int i = 0; i <= b.deg(); ++i) {
      uint64_t sub = (__uint128_t)f * b.c[i] % p;
      rem.c[i + shift] = (rem.c[i + shift] + p - sub) % p;
    }
    rem.norm();
  }
  q.norm();
  return q;
}

// Degree multiset of the irreducible factors of g mod p (distinct-degree
// factorization); requires g squarefree mod p.
std::vector<int> factor_degrees_mod_p(const IntPoly& g, uint64_t p) {
  ModPoly f = mod_reduce(g, p);
  std::vector<int> degs;
  ModPoly x{{0, 1}};
  ModPoly w = x;
  int d = 0;
  while (f.deg() > 0) {
    ++d;
    if (2 * d > f.deg()) {
      degs.push_back(f.deg());
      break;
    }
    w = mod_powmod(w, p, f, p);
    ModPoly wx = w;
    // w - x
    if (wx.c.size() < 2) wx.c.resize(2, 0);
    wx.c[1] = (wx.c[1] + p - 1) % p;
    wx.norm();
    ModPoly g1 = mod_gcd(f, wx, p);
    if (g1.deg() > 0) {
      for (int i = 0; i < g1.deg() / d; ++i) degs.push_back(d);
      f = mod_exact_div(f, g1, p);
      w = mod_rem(w, f, p);
    }
  }
  return degs;
}

uint64_t subset_sums(const std::vector<int>& degs) {
  uint64_t bits = 1;  // bit k set <=> some subset of factors has total degree k
  for (int d : degs) bits |= bits << d;
  return bits;
}

bool is_small_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

IrreducibilityVerdict irreducibility_verdict(const IntPoly& g, int prime_count) {
  if (g.degree() < 1 || !g.is_monic())
    throw std::invalid_argument("irreducibility_verdict: monic polynomial of degree >= 1 required");
  int n = g.degree();
  if (n == 1) return {IrreducibilityVerdict::Kind::Irreducible, IntPoly(), ""};

  // layer 0: squarefree
  mpz_class disc = discriminant_resultant(g);
  if (disc == 0) {
    IntPoly w = gcd(g, derivative(g));
    return {IrreducibilityVerdict::Kind::Reducible, w, "repeated factor"};
  }

  // layer 1: rational (hence integer) roots; divisors of the constant term
  if (g[0] == 0)
    return {IrreducibilityVerdict::Kind::Reducible, IntPoly::x_power(1), "root at 0"};
  mpz_class a0 = abs(g[0]);
  for (mpz_class d = 1; d * d <= a0; ++d) {
    if (a0 % d != 0) continue;
    for (const mpz_class& cand : {mpz_class(d), mpz_class(a0 / d)}) {
      for (int s : {1, -1}) {
        mpz_class r = s * cand;
        if (g.eval(r) == 0)
          return {IrreducibilityVerdict::Kind::Reducible,
                  IntPoly({-r, mpz_class(1)}), "rational root"};
      }
    }
  }

  // layer 2: cyclotomic divisors with phi(d) <= n  (phi(d) >= sqrt(d/2))
  for (int d = 2; d <= 2 * n * n + 1; ++d) {
    IntPoly phi = cyclotomic_poly(d);
    if (phi.degree() > n) continue;
    if (divides(phi, g))
      return {IrreducibilityVerdict::Kind::Reducible, phi, "cyclotomic Phi_" + std::to_string(d)};
  }

  // layer 3: factorization degree-sets modulo good primes
  uint64_t possible = ~0ull;  // candidate factor degrees as a bitmask
  int used = 0;
  for (uint64_t p = 2; used < prime_count && p < 10000; ++p) {
    if (!is_small_prime(p)) continue;
    if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
    possible &= subset_sums(factor_degrees_mod_p(g, p));
    ++used;
    uint64_t proper = possible & ~((1ull << n) | 1ull) & ((1ull << (n + 1)) - 1);
    if (proper == 0) return {IrreducibilityVerdict::Kind::Irreducible, IntPoly(), ""};
  }
  return {IrreducibilityVerdict::Kind::Unknown, IntPoly(), "no cheap certificate"};
}

// --------------------------------------------------------------- parsing

IntPoly parse_intpoly(const std::string& s) {
  std::vector<mpz_class> c;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("parse_intpoly: empty coefficient in \"" + s + "\"");
    mpz_class v;
    if (v.set_str(cur, 10) != 0) throw std::invalid_argument("parse_intpoly: bad integer \"" + cur + "\"");
    c.push_back(v);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',') {
      flush();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  flush();
  return IntPoly(std::move(c));
}

std::string format_intpoly(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) out += ",";
    out += p[i].get_str();
  }
  return out;
}

}  // namespace jpa
