#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jpa {

// Exact floor of a rational.
inline mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline int sign_q(const mpq_class& q) { return sgn(q); }

inline mpz_class pow_z(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline mpq_class pow_q(const mpq_class& b, long e) {
  if (e < 0) {
    if (b == 0) throw std::domain_error("pow_q: 0^negative");
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), b.get_mpq_t());
    return pow_q(inv, -e);
  }
  mpq_class r = 1, base = b;
  long k = e;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

// Total bit size of numerator and denominator; growth guard for long scans.
inline size_t bits_q(const mpq_class& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// "p/q" or "p", lowest terms.
inline std::string format_q(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline mpq_class parse_q(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

}  // namespace jpa
