#include "jpa/analysis.hpp"

#include <algorithm>
#include <random>

#include "jpa/families.hpp"

namespace jpa {

namespace {

IntPoly squarefree_part(const IntPoly& p) {
  IntPoly sp = primitive_part(p);
  IntPoly g = gcd(sp, derivative(sp));
  if (g.degree() > 0) sp = exact_div(sp, g);
  if (sgn(sp.lc()) < 0) sp = -sp;
  return sp;
}

// x^j + x^{-j} as a polynomial in y = x + 1/x (Dickson recursion).
std::vector<IntPoly> dickson_polys(int up_to) {
  std::vector<IntPoly> D(up_to + 1);
  D[0] = IntPoly::constant(2);
  if (up_to >= 1) D[1] = IntPoly::x_power(1);
  for (int j = 2; j <= up_to; ++j)
    D[j] = IntPoly::x_power(1) * D[j - 1] - D[j - 2];
  return D;
}

// Number of roots of q strictly inside |z| = 1, assuming no roots on the
// circle and q(0) != 0. Winding number of q over the unit circle, computed
// exactly: with z = (1 - t^2 + 2it)/(1 + t^2), t real, the real and imaginary
// parts of (1+t^2)^deg * q(z) are integer polynomials U, V in t; the sign
// variation difference of their signed-remainder chain at +/-inf gives twice
// the winding.
int winding_inside(const IntPoly& q) {
  int d = q.degree();
  if (d <= 0) return 0;
  IntPoly cre(std::vector<mpz_class>{1, 0, -1});  // 1 - t^2
  IntPoly cim(std::vector<mpz_class>{0, 2});      // 2t
  IntPoly b(std::vector<mpz_class>{1, 0, 1});     // 1 + t^2
  std::vector<IntPoly> bpow(d + 1);
  bpow[0] = IntPoly::constant(1);
  for (int j = 1; j <= d; ++j) bpow[j] = bpow[j - 1] * b;
  IntPoly pre = IntPoly::constant(1), pim;  // (1 - t^2 + 2it)^k
  IntPoly U, V;
  for (int k = 0; k <= d; ++k) {
    U = U + q[k] * (pre * bpow[d - k]);
    V = V + q[k] * (pim * bpow[d - k]);
    if (k < d) {
      IntPoly nre = pre * cre - pim * cim;
      pim = pre * cim + pim * cre;
      pre = std::move(nre);
    }
  }
  auto chain = signed_remainder_chain(RatPoly(U), RatPoly(V));
  int n2 = variations_at_inf(chain, +1) - variations_at_inf(chain, -1);
  if (n2 < 0 || n2 % 2 != 0 || n2 / 2 > d)
    throw std::logic_error("winding_inside: inconsistent variation count");
  return n2 / 2;
}

Interval div_iv(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("div_iv: denominator contains zero");
  mpq_class v1 = a.lo / b.lo, v2 = a.lo / b.hi, v3 = a.hi / b.lo, v4 = a.hi / b.hi;
  return Interval(std::min({v1, v2, v3, v4}), std::max({v1, v2, v3, v4}));
}

mpq_class pow2q(long k) {  // 2^-k
  mpz_class d = 1;
  d <<= k;
  return mpq_class(1, d);
}

// Outward-rounded square root of a non-negative interval, 2^-bits granularity.
Interval sqrt_iv(const Interval& a, long bits) {
  if (sgn(a.lo) < 0) throw std::domain_error("sqrt_iv: negative interval");
  mpz_class scale = 1;
  scale <<= 2 * bits;
  auto scaled = [&](const mpq_class& q, bool up) {
    mpq_class s = q * scale;
    mpz_class n;
    if (up)
      mpz_cdiv_q(n.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
    else
      mpz_fdiv_q(n.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
    return n;
  };
  mpz_class nlo = scaled(a.lo, false), nhi = scaled(a.hi, true), r;
  mpz_sqrt(r.get_mpz_t(), nlo.get_mpz_t());  // floor sqrt
  mpz_class den = 1;
  den <<= bits;
  mpq_class lo(r, den);
  mpz_sqrt(r.get_mpz_t(), nhi.get_mpz_t());
  if (r * r < nhi) r += 1;
  mpq_class hi(r, den);
  lo.canonicalize();
  hi.canonicalize();
  return Interval(lo, hi);
}

Interval refined(const IntPoly& p, const Interval& I, long bits) {
  if (sgn(I.width()) == 0) return I;
  return refine_root(p, I, pow2q(bits));
}

// Decides r_f >= r_b for roots of distinct squarefree polynomials given by
// isolating intervals; equality is detected through a common factor.
bool root_geq(const IntPoly& f, Interval rf, const IntPoly& b, Interval rb) {
  for (long bits = 16; bits <= 1024; bits *= 2) {
    rf = refined(f, rf, bits);
    rb = refined(b, rb, bits);
    if (rf.lo >= rb.hi) return true;
    if (rf.hi < rb.lo) return false;
    IntPoly g = gcd(f, b);
    if (g.degree() > 0) {
      Interval overlap(std::max(rf.lo, rb.lo), std::min(rf.hi, rb.hi));
      if (count_real_roots(g, overlap) > 0) return true;  // equal roots
    }
  }
  throw std::logic_error("root_geq: could not separate roots");
}

}  // namespace

UnitDiskCount unit_disk_count(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("unit_disk_count: zero polynomial");
  IntPoly s = squarefree_part(p);
  UnitDiskCount out;
  if (s.degree() >= 1 && s[0] == 0) {  // squarefree: at most one root at 0
    s = exact_div(s, IntPoly::x_power(1));
    ++out.inside;
  }
  if (s.eval(mpz_class(1)) == 0) {
    s = exact_div(s, IntPoly(std::vector<mpz_class>{-1, 1}));
    ++out.on_circle;
  }
  if (s.eval(mpz_class(-1)) == 0) {
    s = exact_div(s, IntPoly(std::vector<mpz_class>{1, 1}));
    ++out.on_circle;
  }
  IntPoly g = gcd(s, reciprocal(s));
  if (g.degree() > 0) {
    // Roots of g are closed under z -> 1/z with +-1 excluded, so g is
    // palindromic of even degree; substitute y = x + 1/x.
    if (!(g == reciprocal(g)))
      throw std::logic_error("unit_disk_count: reciprocal gcd not palindromic");
    int k = g.degree() / 2;
    auto D = dickson_polys(k);
    IntPoly h = IntPoly::constant(g[k]);
    for (int j = 1; j <= k; ++j) h = h + g[k + j] * D[j];
    int on_g = 2 * count_real_roots(h, Interval(-2, 2));
    out.on_circle += on_g;
    out.inside += (g.degree() - on_g) / 2;
    s = exact_div(s, g);
  }
  out.inside += winding_inside(s);
  return out;
}

const char* pisot_name(PisotVerdict v) {
  switch (v) {
    case PisotVerdict::Yes: return "Yes";
    case PisotVerdict::No: return "No";
    case PisotVerdict::Boundary: return "Boundary";
  }
  return "?";
}

PisotResult is_pisot(const IntPoly& f) {
  if (!f.is_monic() || f.degree() < 1)
    throw std::invalid_argument("is_pisot: monic polynomial of degree >= 1 required");
  IntPoly sp = squarefree_part(f);
  int d = sp.degree();
  mpq_class B = root_bound(sp);
  if (count_real_roots(sp, Interval(1, B)) < 1)
    throw std::invalid_argument("is_pisot: no real root > 1");
  if (d == 1) return {PisotVerdict::Yes, "rational integer > 1"};
  auto [inside, on] = unit_disk_count(sp);
  if (on > 0) return {PisotVerdict::Boundary, "conjugate(s) on the unit circle"};
  if (inside == d - 1) return {PisotVerdict::Yes, ""};
  // More than one root outside: the verdict depends on which irreducible
  // factor the dominant root belongs to.
  IrreducibilityVerdict iv = irreducibility_verdict(sp);
  if (iv.irreducible()) return {PisotVerdict::No, "conjugate outside the closed unit disk"};
  if (iv.reducible()) {
    IntPoly w = primitive_part(iv.witness);
    if (sgn(w.lc()) < 0) w = -w;
    IntPoly cof = exact_div(sp, w);
    auto roots = isolate_real_roots(sp, Interval(-B, B));
    Interval dom = roots.back();  // rightmost real root; > 1 by the check above
    const IntPoly& carrier = count_real_roots(w, dom) == 1 ? w : cof;
    PisotResult sub = is_pisot(carrier);
    sub.note = "via factor " + carrier.str() +
               (sub.note.empty() ? "" : "; " + sub.note);
    return sub;
  }
  return {PisotVerdict::Boundary,
          "roots outside the disk, irreducibility unknown: " + iv.note};
}

NegativeRootReport negative_root_bound_check(const IntPoly& f, int n) {
  NegativeRootReport rep;
  IntPoly sf = squarefree_part(f);
  if (sf.degree() >= 1 && sf[0] == 0) sf = exact_div(sf, IntPoly::x_power(1));
  mpq_class B = root_bound(sf);
  for (auto& I : isolate_real_roots(sf, Interval(-B, 0)))
    rep.negative_roots.push_back(refined(sf, I, 40));
  std::vector<mpz_class> bc(n, 0);
  bc[n - 1] = 1;
  bc[n - 2] = 1;
  bc[0] += 1;  // x^{n-1} + x^{n-2} + 1
  IntPoly bound(std::move(bc));
  auto broots = isolate_real_roots(bound, Interval(-root_bound(bound), 0));
  if (!broots.empty()) {
    rep.bound_root = refined(bound, broots.front(), 40);
    for (size_t i = 0; i < rep.negative_roots.size(); ++i) {
      auto raw = isolate_real_roots(sf, Interval(-B, 0));
      if (!root_geq(sf, raw[i], bound, broots.front())) {
        rep.all_above_bound = false;
        rep.findings.push_back("negative root below the bound root of " + bound.str());
      }
    }
  }
  int below = count_real_roots(sf, Interval(-B, -1));
  if (sf.sign_at(-1) == 0) --below;  // (lo, hi] includes the endpoint
  rep.has_root_below_minus1 = below > 0;
  if (rep.has_root_below_minus1 && n % 2 == 1)
    rep.findings.push_back("odd degree with a real root < -1 (unexpected empirically)");
  return rep;
}

DiscCriterionReport cubic_disc_criterion(const mpz_class& c1, const mpz_class& c2,
                                         const std::vector<mpz_class>& t_samples,
                                         const std::vector<long>& m_samples) {
  DiscCriterionReport rep;
  rep.c1 = c1;
  rep.c2 = c2;
  mpz_class ceil_q;  // ceil(c1^2 / 4)
  mpz_cdiv_q_ui(ceil_q.get_mpz_t(), mpz_class(c1 * c1).get_mpz_t(), 4);
  rep.criterion = c2 >= ceil_q;
  if (c1 < 0 || c2 < 1)
    throw std::invalid_argument("cubic_disc_criterion: need c1 >= 0, c2 >= 1");
  for (long m : m_samples) {
    for (const auto& t : t_samples) {
      if (m < 3 || t < 1)
        throw std::invalid_argument("cubic_disc_criterion: need m >= 3, t >= 1");
      // built from the recurrence directly: the criterion is also probed
      // outside the monotone c-chain (where the cubic is still well defined)
      RecurrenceTable tab = recurrence_table({1, c1, c2}, 3, static_cast<int>(m));
      std::vector<mpz_class> fc(4);
      const mpz_class cs[3] = {1, c1, c2};
      for (int i = 0; i < 3; ++i) fc[i] = -(tab.at(i, static_cast<int>(m)) * t + cs[i]);
      fc[3] = 1;
      DiscSample s;
      s.m = m;
      s.t = t;
      s.f = IntPoly(std::move(fc));
      // deg 3: disc = (-1)^{3*2/2} Res(f, f') / lc = -Res(f, f')
      s.disc = -discriminant_resultant(s.f);
      if (s.disc == 0) {
        s.matches = false;
        rep.findings.push_back("zero discriminant at m=" + std::to_string(m) +
                               ", t=" + t.get_str());
      } else {
        s.matches = (s.disc < 0) == rep.criterion;
        if (!s.matches)
          rep.findings.push_back("criterion mismatch at m=" + std::to_string(m) + ", t=" +
                                 t.get_str() + ": disc=" + s.disc.get_str());
        // cross-check: disc < 0 iff exactly one real root (cubic)
        int nr = count_real_roots_total(s.f);
        if ((s.disc < 0) != (nr == 1))
          rep.findings.push_back("disc sign vs real-root count mismatch at m=" +
                                 std::to_string(m) + ", t=" + t.get_str());
      }
      rep.all_match = rep.all_match && s.matches;
      rep.samples.push_back(std::move(s));
    }
  }
  return rep;
}

SamplerReport conjecture1_sample(int n, long samples, std::uint64_t seed, long cap) {
  if (n < 2) throw std::invalid_argument("conjecture1_sample: n >= 2 required");
  SamplerReport rep;
  rep.n = n;
  rep.samples = samples;
  rep.seed = seed;
  rep.cap = cap;
  for (long s = 0; s < samples; ++s) {
    // per-sample engine: deterministic and order-independent
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(s + 1));
    auto draw = [&](long lo, long hi) { return lo + static_cast<long>(rng() % (hi - lo + 1)); };
    std::vector<mpz_class> a(n);
    a[n - 1] = draw(1, cap);
    for (int i = n - 2; i >= 1; --i) a[i] = draw(0, a[i + 1].get_si());
    a[0] = draw(1, a[n - 1].get_si());
    std::vector<mpz_class> gc(n + 1);
    for (int i = 0; i < n; ++i) gc[i] = -a[i];
    gc[n] = 1;
    IntPoly g(std::move(gc));
    IrreducibilityVerdict v = irreducibility_verdict(g);
    if (v.irreducible()) {
      ++rep.irreducible;
      continue;
    }
    if (v.kind == IrreducibilityVerdict::Kind::Unknown) {
      ++rep.unknown;
      continue;
    }
    bool matched = false;
    if (n % 2 == 0 && g.sign_at(-1) == 0) {
      ++rep.case_b;
      matched = true;
    }
    if (n % 6 == 5 && divides(cyclotomic_poly(6), g)) {
      ++rep.case_c;
      matched = true;
    }
    if (a[n - 1] == a[n - 2]) {
      for (int m = 2; m < n; ++m) {
        if (n % m != 0) continue;
        if (divides(cyclotomic_poly(m), g)) {
          ++rep.case_a;
          matched = true;
        }
      }
    }
    if (matched)
      ++rep.reducible_matched;
    else
      rep.counterexamples.push_back(format_intpoly(g));
  }
  return rep;
}

namespace {

// Exact max-modulus enclosure of the lone non-real pair via the product of all
// roots divided by the (refined) real ones; valid only when exactly one pair.
std::optional<Interval> nonreal_pair_modulus(const IntPoly& sq) {
  IntPoly s = sq;
  while (s.degree() >= 1 && s[0] == 0) s = exact_div(s, IntPoly::x_power(1));
  int d = s.degree();
  if (d < 2) return std::nullopt;
  mpq_class B = root_bound(s);
  auto roots = isolate_real_roots(s, Interval(-B, B));
  int nonreal = d - static_cast<int>(roots.size());
  if (nonreal != 2) return std::nullopt;
  // product of all roots = (-1)^d c0 / lc
  mpq_class prod_all(s[0], s.lc());
  if (d % 2 != 0) prod_all = -prod_all;
  prod_all.canonicalize();
  Interval real_prod(1, 1);
  for (const auto& I : roots) {
    Interval r = refined(s, I, 70);
    if (r.contains_zero()) return std::nullopt;  // cannot divide safely
    real_prod = real_prod * r;
  }
  Interval mod2 = div_iv(Interval(prod_all, prod_all), real_prod);
  if (sgn(mod2.lo) < 0) mod2.lo = 0;
  return sqrt_iv(mod2, 48);
}

}  // namespace

RootReport analyze(const IntPoly& p) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("analyze: nonconstant polynomial required");
  RootReport rep;
  rep.poly = p;
  rep.squarefree = squarefree_part(p);
  rep.had_multiple_roots = rep.squarefree.degree() != p.degree();
  if (rep.had_multiple_roots)
    rep.findings.push_back("repeated roots: analysis applies to the squarefree part");
  const IntPoly& sq = rep.squarefree;
  int d = sq.degree();
  auto [inside, on] = unit_disk_count(sq);
  rep.inside = inside;
  rep.on_circle = on;
  rep.outside = d - inside - on;
  mpq_class B = root_bound(sq);
  auto roots = isolate_real_roots(sq, Interval(-B, B));
  if (!roots.empty()) rep.dominant_root = refined(sq, roots.back(), 40);
  for (const auto& I : roots) {
    Interval r = refined(sq, I, 40);
    for (long bits = 80; sgn(r.width()) > 0 && r.contains_zero() && bits <= 1280; bits *= 2)
      r = refined(sq, r, bits);  // separate a nonzero root from 0
    if (sgn(r.hi) < 0) rep.negative_real_roots.push_back(r);
  }
  try {
    rep.pisot = is_pisot(sq);
  } catch (const std::invalid_argument& e) {
    rep.findings.push_back(std::string("pisot test not applicable: ") + e.what());
  }
  int nonreal = d - static_cast<int>(roots.size());
  if (nonreal > 0) {
    if (auto m = nonreal_pair_modulus(sq)) {
      rep.max_nonreal_modulus = *m;
      rep.modulus_kind = "exact-symmetric";
    } else {
      rep.max_nonreal_modulus = Interval(0, B);
      rep.modulus_kind = "coarse-bound";
    }
  }
  for (int m = 1; m <= 2 * d * d + 2; ++m) {
    IntPoly phi = cyclotomic_poly(m);
    if (phi.degree() <= d && divides(phi, sq)) rep.cyclotomic_divisors.push_back(m);
  }
  rep.irreducibility = irreducibility_verdict(sq);
  return rep;
}

}  // namespace jpa
