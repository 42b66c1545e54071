#pragma once

#include <string_view>

#include "certnum/interval.hpp"

namespace certnum {

namespace detail {

using mpfr_unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

inline Interval monotone_inc(const Interval& x, mpfr_prec_t p, mpfr_unary f,
                             const char* name) {
  Interval r(p);
  f(r.lo_mut(), x.lo(), MPFR_RNDD);
  f(r.hi_mut(), x.hi(), MPFR_RNDU);
  r.check(name);
  return r;
}

inline Interval monotone_dec(const Interval& x, mpfr_prec_t p, mpfr_unary f,
                             const char* name) {
  Interval r(p);
  f(r.lo_mut(), x.hi(), MPFR_RNDD);
  f(r.hi_mut(), x.lo(), MPFR_RNDU);
  r.check(name);
  return r;
}

inline mpfr_prec_t pick(const Interval& x, mpfr_prec_t prec) {
  return prec > 0 ? prec : x.prec();
}

}  // namespace detail

inline Interval exp(const Interval& x, mpfr_prec_t prec = 0) {
  return detail::monotone_inc(x, detail::pick(x, prec), mpfr_exp, "exp");
}

inline Interval expm1(const Interval& x, mpfr_prec_t prec = 0) {
  return detail::monotone_inc(x, detail::pick(x, prec), mpfr_expm1, "expm1");
}

inline Interval log(const Interval& x, mpfr_prec_t prec = 0) {
  if (!x.is_positive()) throw DomainError("log: argument must be positive");
  return detail::monotone_inc(x, detail::pick(x, prec), mpfr_log, "log");
}

inline Interval log2(const Interval& x, mpfr_prec_t prec = 0) {
  if (!x.is_positive()) throw DomainError("log2: argument must be positive");
  return detail::monotone_inc(x, detail::pick(x, prec), mpfr_log2, "log2");
}

inline Interval log1p(const Interval& x, mpfr_prec_t prec = 0) {
  if (mpfr_cmp_si(x.lo(), -1) <= 0) throw DomainError("log1p: argument must exceed -1");
  return detail::monotone_inc(x, detail::pick(x, prec), mpfr_log1p, "log1p");
}

inline Interval sqrt(const Interval& x, mpfr_prec_t prec = 0) {
  if (!x.is_nonnegative()) throw DomainError("sqrt: argument must be nonnegative");
  return detail::monotone_inc(x, detail::pick(x, prec), mpfr_sqrt, "sqrt");
}

inline Interval sinh(const Interval& x, mpfr_prec_t prec = 0) {
  return detail::monotone_inc(x, detail::pick(x, prec), mpfr_sinh, "sinh");
}

inline Interval cosh(const Interval& x, mpfr_prec_t prec = 0) {
  Interval a = abs(x);
  return detail::monotone_inc(a, detail::pick(x, prec), mpfr_cosh, "cosh");
}

inline Interval tanh(const Interval& x, mpfr_prec_t prec = 0) {
  return detail::monotone_inc(x, detail::pick(x, prec), mpfr_tanh, "tanh");
}

inline Interval asinh(const Interval& x, mpfr_prec_t prec = 0) {
  return detail::monotone_inc(x, detail::pick(x, prec), mpfr_asinh, "asinh");
}

inline Interval acosh(const Interval& x, mpfr_prec_t prec = 0) {
  if (mpfr_cmp_si(x.lo(), 1) < 0) throw DomainError("acosh: argument must be at least 1");
  return detail::monotone_inc(x, detail::pick(x, prec), mpfr_acosh, "acosh");
}

inline Interval atanh(const Interval& x, mpfr_prec_t prec = 0) {
  if (mpfr_cmp_si(x.lo(), -1) <= 0 || mpfr_cmp_si(x.hi(), 1) >= 0)
    throw DomainError("atanh: argument must lie in (-1,1)");
  return detail::monotone_inc(x, detail::pick(x, prec), mpfr_atanh, "atanh");
}

inline Interval asin(const Interval& x, mpfr_prec_t prec = 0) {
  if (mpfr_cmp_si(x.lo(), -1) < 0 || mpfr_cmp_si(x.hi(), 1) > 0)
    throw DomainError("asin: argument must lie in [-1,1]");
  return detail::monotone_inc(x, detail::pick(x, prec), mpfr_asin, "asin");
}

inline Interval acos(const Interval& x, mpfr_prec_t prec = 0) {
  if (mpfr_cmp_si(x.lo(), -1) < 0 || mpfr_cmp_si(x.hi(), 1) > 0)
    throw DomainError("acos: argument must lie in [-1,1]");
  return detail::monotone_dec(x, detail::pick(x, prec), mpfr_acos, "acos");
}

inline Interval atan(const Interval& x, mpfr_prec_t prec = 0) {
  return detail::monotone_inc(x, detail::pick(x, prec), mpfr_atan, "atan");
}

// cos over an interval: hull of the endpoint enclosures, plus +-1 for every
// multiple of pi that may lie inside. The candidate test is conservative, so
// uncertainty only widens the result.
inline Interval cos(const Interval& x, mpfr_prec_t prec = 0) {
  mpfr_prec_t p = detail::pick(x, prec);
  Interval elo(p), ehi(p);
  mpfr_cos(elo.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_cos(elo.hi_mut(), x.lo(), MPFR_RNDU);
  mpfr_cos(ehi.lo_mut(), x.hi(), MPFR_RNDD);
  mpfr_cos(ehi.hi_mut(), x.hi(), MPFR_RNDU);
  Interval r = Interval::hull(elo, ehi);

  Interval q = x / Interval::pi(p + 8);
  if (!mpfr_fits_slong_p(q.lo(), MPFR_RNDD) || !mpfr_fits_slong_p(q.hi(), MPFR_RNDU))
    return Interval::from_endpoints("-1", "1", p);
  long k_min = mpfr_get_si(q.lo(), MPFR_RNDU);  // smallest k with k*pi possibly inside
  long k_max = mpfr_get_si(q.hi(), MPFR_RNDD);  // largest such k
  if (k_max - k_min > 4) return Interval::from_endpoints("-1", "1", p);
  for (long k = k_min; k <= k_max; ++k) {
    r = Interval::hull(r, Interval::point(k % 2 == 0 ? 1 : -1, p));
  }
  r.check("cos");
  return r;
}

inline Interval sin(const Interval& x, mpfr_prec_t prec = 0) {
  mpfr_prec_t p = detail::pick(x, prec);
  Interval half_pi = Interval::pi(p + 8).scalb(-1);
  return cos(x - half_pi, p);
}

inline Interval tan(const Interval& x, mpfr_prec_t prec = 0) {
  mpfr_prec_t p = detail::pick(x, prec);
  Interval c = cos(x, p + 8);
  if (c.contains_zero()) throw DomainError("tan: interval may contain a pole");
  return detail::monotone_inc(x, p, mpfr_tan, "tan");
}

inline Interval pow(const Interval& x, const Interval& y, mpfr_prec_t prec = 0) {
  mpfr_prec_t p = prec > 0 ? prec : result_prec(x, y);
  if (y.is_point() && mpfr_integer_p(y.lo()) && mpfr_fits_slong_p(y.lo(), MPFR_RNDN)) {
    return pow_si(x, mpfr_get_si(y.lo(), MPFR_RNDN));
  }
  if (!x.is_positive()) throw DomainError("pow: base must be positive for non-integer exponent");
  return exp(y * log(x, p + 8), p);
}

inline Interval ieval_elementary(std::string_view f, const Interval& x,
                                 const Precision& prec) {
  prec.validate();
  mpfr_prec_t p = prec.bits;
  if (f == "exp") return exp(x, p);
  if (f == "log") return log(x, p);
  if (f == "sqrt") return sqrt(x, p);
  if (f == "sin") return sin(x, p);
  if (f == "cos") return cos(x, p);
  if (f == "tan") return tan(x, p);
  if (f == "arcsin") return asin(x, p);
  if (f == "arctan") return atan(x, p);
  if (f == "sinh") return sinh(x, p);
  if (f == "cosh") return cosh(x, p);
  if (f == "tanh") return tanh(x, p);
  if (f == "arcsinh") return asinh(x, p);
  if (f == "arctanh") return atanh(x, p);
  if (f == "pow") throw DomainError("pow takes two arguments");
  throw UnknownName("ieval_elementary: unknown function " + std::string(f));
}

inline Interval ieval_elementary(std::string_view f, const Interval& x,
                                 const Interval& y, const Precision& prec) {
  prec.validate();
  if (f != "pow") throw UnknownName("two-argument form is only for pow");
  return pow(x, y, prec.bits);
}

}  // namespace certnum
