#include "jpa/field.hpp"

#include <algorithm>
#include <sstream>

namespace jpa {

namespace {

// Rules out a rational distinguished root up front: a rational root of a
// monic integer polynomial is an integer dividing the constant term.
void check_no_positive_integer_root(const IntPoly& f) {
  mpq_class bound = root_bound(f);
  for (mpz_class k = 1; k <= bound; ++k) {
    if (f[0] % k != 0) continue;
    if (f.eval(k) == 0)
      throw std::invalid_argument("field_new: distinguished root is the integer " + k.get_str());
  }
}

}  // namespace

NumberField::NumberField(IntPoly f, Mode mode) : f_(std::move(f)) {
  n_ = f_.degree();
  if (n_ < 2 || !f_.is_monic())
    throw std::invalid_argument("NumberField: monic polynomial of degree >= 2 required");
  check_no_positive_integer_root(f_);
  br_ = isolate_dominant_root(
      f_, mode == Mode::steep ? IsolationMode::steep : IsolationMode::positive_root);
  sign_lo_ = f_.sign_at(br_.lo);
  if (sign_lo_ == 0 || sign_lo_ == f_.sign_at(br_.hi))
    throw std::invalid_argument("NumberField: bracket endpoints do not straddle the root");
  // X^k mod f for k = n .. 2n-2
  std::vector<mpz_class> cur(n_);  // X^n mod f = -f[0] - ... - f[n-1] X^{n-1}
  for (int i = 0; i < n_; ++i) cur[i] = -f_[i];
  xpow_.push_back(cur);
  for (int k = n_ + 1; k <= 2 * n_ - 2; ++k) {
    std::vector<mpz_class> nxt(n_, 0);
    for (int i = 0; i + 1 < n_; ++i) nxt[i + 1] = cur[i];
    const mpz_class& top = cur[n_ - 1];
    if (top != 0)
      for (int i = 0; i < n_; ++i) nxt[i] -= top * f_[i];
    cur = std::move(nxt);
    xpow_.push_back(cur);
  }
}

Interval NumberField::bracket() const {
  std::lock_guard<std::mutex> lock(mu_);
  return br_;
}

Interval NumberField::bracket_refined(long bits) const {
  std::lock_guard<std::mutex> lock(mu_);
  while (br_bits_ < bits) {
    mpq_class mid = br_.mid();
    int sm = f_.sign_at(mid);
    if (sm == 0)
      throw std::invalid_argument("NumberField: bracket hit a rational root");
    if (sm == sign_lo_)
      br_.lo = mid;
    else
      br_.hi = mid;
    ++br_bits_;
  }
  return br_;
}

int NumberField::sign_at_omega(const IntPoly& a) const {
  if (a.is_zero()) return 0;
  long bits = std::max(br_bits_, 16l);
  bool checked_gcd = false;
  while (true) {
    Interval v = eval_interval(a, bracket_refined(bits));
    if (sgn(v.lo) > 0) return 1;
    if (sgn(v.hi) < 0) return -1;
    if (!checked_gcd && bits >= 64) {
      checked_gcd = true;
      IntPoly g = gcd(a, f_);
      if (g.degree() >= 1 && count_real_roots(g, bracket()) > 0)
        throw ZeroDivisorError("zero divisor - defining polynomial reducible", g);
    }
    bits = bits * 2;
  }
}

FieldPtr field_new(const IntPoly& f, NumberField::Mode mode) {
  return std::make_shared<const NumberField>(f, mode);
}

// -------------------------------------------------------------- FieldElem

FieldElem::FieldElem(FieldPtr field, std::vector<mpq_class> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("FieldElem: null field");
  if (static_cast<int>(c_.size()) != field_->degree())
    throw std::invalid_argument("FieldElem: coefficient vector length must equal field degree");
  for (auto& x : c_) x.canonicalize();
}

FieldElem FieldElem::from_rational(FieldPtr field, const mpq_class& v) {
  std::vector<mpq_class> c(field->degree(), 0);
  c[0] = v;
  return FieldElem(std::move(field), std::move(c));
}

FieldElem FieldElem::omega(FieldPtr field) {
  std::vector<mpq_class> c(field->degree(), 0);
  c[1] = 1;
  return FieldElem(std::move(field), std::move(c));
}

bool FieldElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x == 0; });
}

bool FieldElem::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

RatPoly FieldElem::rep() const { return RatPoly(c_); }

namespace {
void check_same_field(const FieldElem& a, const FieldElem& b) {
  if (!(*a.field() == *b.field()))
    throw std::invalid_argument("FieldElem: operands belong to different fields");
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same_field(*this, o);
  std::vector<mpq_class> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same_field(*this, o);
  std::vector<mpq_class> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::operator-() const {
  std::vector<mpq_class> c(c_);
  for (auto& x : c) x = -x;
  return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same_field(*this, o);
  int n = field_->degree();
  std::vector<mpq_class> prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<mpq_class> c(prod.begin(), prod.begin() + n);
  for (int k = n; k <= 2 * n - 2; ++k) {
    if (prod[k] == 0) continue;
    const auto& red = field_->xpow_[k - n];
    for (int i = 0; i < n; ++i)
      if (red[i] != 0) c[i] += prod[k] * red[i];
  }
  return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw std::domain_error("FieldElem::inv: division by zero");
  if (is_rational()) return from_rational(field_, 1 / c_[0]);
  ExtGcd e = ext_gcd(rep(), RatPoly(field_->poly()));
  if (e.g.degree() != 0) {
    IntPoly w = primitive_part(e.g.clear_denominators().first);
    if (w.lc() < 0) w = mpz_class(-1) * w;
    throw ZeroDivisorError("zero divisor - defining polynomial reducible", w);
  }
  // s * rep = 1 mod f
  std::vector<mpq_class> c(field_->degree(), 0);
  for (int i = 0; i <= e.s.degree(); ++i) c[i] = e.s[i];
  return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  FieldElem r = from_rational(field_, 1), b = *this;
  long k = e;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
  return *field_ == *o.field_ && c_ == o.c_;
}

int FieldElem::sign() const {
  if (is_rational()) return sgn(c_[0]);
  auto [A, d] = rep().clear_denominators();
  return field_->sign_at_omega(A);
}

Interval FieldElem::enclosure(long bits) const {
  if (is_rational()) return Interval(c_[0], c_[0]);
  RatPoly r = rep();
  long wbits = std::max(bits + 8, 16l);
  while (true) {
    Interval v = eval_interval(r, field_->bracket_refined(wbits));
    if (v.width() * pow_q(mpq_class(2), bits) <= 1) return v;
    wbits *= 2;
  }
}

mpz_class FieldElem::floor() const {
  if (is_rational()) return floor_q(c_[0]);
  auto [A, d] = rep().clear_denominators();  // value = A(omega)/d
  long bits = 16;
  while (true) {
    Interval v = eval_interval(A, field_->bracket_refined(bits));
    mpz_class flo = floor_q(v.lo / d), fhi = floor_q(v.hi / d);
    if (flo == fhi) return flo;
    if (fhi - flo == 1) {
      // one integer boundary k = fhi in the enclosure; settle it exactly
      IntPoly shifted = A - IntPoly::constant(fhi * d);
      int s = field_->sign_at_omega(shifted);
      return s >= 0 ? fhi : flo;
    }
    bits *= 2;
  }
}

mpq_class FieldElem::norm() const {
  auto [A, d] = rep().clear_denominators();
  int n = field_->degree();
  if (A.is_zero()) return 0;
  mpz_class r = resultant(field_->poly(), A);
  return mpq_class(r) / pow_z(d, n);
}

size_t FieldElem::max_bits() const {
  size_t m = 0;
  for (const auto& x : c_) m = std::max(m, bits_q(x));
  return m;
}

std::string FieldElem::key() const {
  std::string out;
  for (const auto& x : c_) {
    out += format_q(x);
    out += ',';
  }
  return out;
}

std::string FieldElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < field_->degree(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class v = c_[i];
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    mpq_class mag = abs(v);
    if (mag != 1 || i == 0) os << format_q(mag);
    if (i > 0) {
      if (mag != 1) os << "*";
      os << "w";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

FieldElem operator*(const mpq_class& s, const FieldElem& a) {
  std::vector<mpq_class> c(a.coeffs());
  for (auto& x : c) x *= s;
  return FieldElem(a.field(), std::move(c));
}

FieldElem operator+(const FieldElem& a, const mpq_class& s) {
  std::vector<mpq_class> c(a.coeffs());
  c[0] += s;
  return FieldElem(a.field(), std::move(c));
}

FieldElem operator-(const FieldElem& a, const mpq_class& s) {
  std::vector<mpq_class> c(a.coeffs());
  c[0] -= s;
  return FieldElem(a.field(), std::move(c));
}

std::string format_elem(const FieldElem& e) {
  std::string out;
  for (size_t i = 0; i < e.coeffs().size(); ++i) {
    if (i) out += ",";
    out += format_q(e.coeffs()[i]);
  }
  return out;
}

FieldElem parse_elem(const FieldPtr& field, const std::string& s) {
  std::vector<mpq_class> c;
  std::string cur;
  auto flush = [&] {
    c.push_back(parse_q(cur));
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',')
      flush();
    else if (!isspace(static_cast<unsigned char>(ch)))
      cur += ch;
  }
  flush();
  return FieldElem(field, std::move(c));
}

}  // namespace jpa
