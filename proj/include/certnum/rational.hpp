#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "certnum/interval.hpp"

namespace certnum {

// Exact rational layer: table entries, binomials and identity checks are done
// in mpq/mpz and only converted to intervals at the report boundary.

inline mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("unparseable rational: " + s);
  q.canonicalize();
  return q;
}

inline Interval interval_from_q(const mpq_class& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_mut(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_mut(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

inline Interval interval_from_z(const mpz_class& z, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_mut(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_mut(), z.get_mpz_t(), MPFR_RNDU);
  return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline bool contains_q(const Interval& x, const mpq_class& q) {
  return mpfr_cmp_q(x.lo(), q.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(x.hi(), q.get_mpq_t()) >= 0;
}

inline bool certainly_lt_q(const Interval& x, const mpq_class& q) {
  return mpfr_cmp_q(x.hi(), q.get_mpq_t()) < 0;
}

inline bool certainly_gt_q(const Interval& x, const mpq_class& q) {
  return mpfr_cmp_q(x.lo(), q.get_mpq_t()) > 0;
}

// Floor of the upper endpoint, for bounds reported as integers.
inline mpz_class floor_hi(const Interval& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.hi(), MPFR_RNDD);
  return z;
}

inline mpz_class ceil_hi(const Interval& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.hi(), MPFR_RNDU);
  return z;
}

inline mpz_class floor_lo(const Interval& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.lo(), MPFR_RNDD);
  return z;
}

inline mpz_class ceil_lo(const Interval& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.lo(), MPFR_RNDU);
  return z;
}

// Ceiling of an interval known to enclose a unique integer transition; both
// endpoints must agree or the result is ambiguous.
inline mpz_class ceil_exact(const Interval& x) {
  mpz_class a = ceil_lo(x);
  mpz_class b = ceil_hi(x);
  if (a != b) throw CertificationFailed("ceiling is not determined by the enclosure");
  return a;
}

inline mpz_class floor_exact(const Interval& x) {
  mpz_class a = floor_lo(x);
  mpz_class b = floor_hi(x);
  if (a != b) throw CertificationFailed("floor is not determined by the enclosure");
  return a;
}

}  // namespace certnum
