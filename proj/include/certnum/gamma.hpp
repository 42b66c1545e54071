#pragma once

#include <mutex>
#include <vector>

#include "certnum/elementary.hpp"
#include "certnum/interval.hpp"
#include "certnum/rational.hpp"

namespace certnum {

namespace detail {

// B_0, B_1, B_2, ... by the defining recurrence, exact.
inline const mpq_class& bernoulli(std::size_t n) {
  static std::vector<mpq_class> cache = {mpq_class(1), mpq_class(-1, 2)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    std::size_t m = cache.size();
    mpq_class acc(0);
    for (std::size_t k = 0; k < m; ++k) {
      acc += mpq_class(binomial(m + 1, k)) * cache[k];
    }
    cache.push_back(-acc / mpq_class(m + 1));
  }
  return cache[n];
}

}  // namespace detail

// log Gamma by the Stirling series after an integer shift. For real y > 0 the
// remainder after N terms is bounded in magnitude by the first omitted term,
// |R_N| <= |B_{2N+2}| / ((2N+1)(2N+2) y^{2N+1}).
inline Interval log_gamma(const Interval& x, const Precision& prec) {
  prec.validate();
  if (!x.is_positive()) throw DomainError("log_gamma: argument must be positive");
  const mpfr_prec_t p = prec.bits + 32;

  long shift_floor = 16;
  for (int attempt = 0; attempt < 8; ++attempt, shift_floor *= 2) {
    long m = 0;
    if (mpfr_cmp_si(x.lo(), shift_floor) < 0) {
      mpfr_t need;
      mpfr_init2(need, 64);
      mpfr_si_sub(need, shift_floor, x.lo(), MPFR_RNDU);
      m = mpfr_get_si(need, MPFR_RNDU) + 1;
      mpfr_clear(need);
    }
    Interval y = x + Interval::point(m, p);

    int N = -1;
    Interval rem_bound(p);
    for (int n = 4; n <= 96; ++n) {
      mpq_class b = detail::bernoulli(2 * n + 2);
      if (b < 0) b = -b;
      b /= mpq_class((2 * n + 1)) * mpq_class((2 * n + 2));
      Interval t = interval_from_q(b, p) / pow_si(y.lower(), 2 * n + 1);
      if (mpfr_zero_p(t.hi()) || mpfr_get_exp(t.hi()) < -(prec.bits + 16)) {
        N = n;
        rem_bound = t.upper();
        break;
      }
    }
    if (N < 0) continue;

    Interval half = interval_from_q(mpq_class(1, 2), p);
    Interval two_pi = Interval::point(2, p) * Interval::pi(p);
    Interval s = (y - half) * log(y, p) - y + log(two_pi, p) * half;
    for (int n = 1; n <= N; ++n) {
      mpq_class c = detail::bernoulli(2 * n) / (mpq_class(2 * n) * mpq_class(2 * n - 1));
      s = s + interval_from_q(c, p) / pow_si(y, 2 * n - 1);
    }
    s = Interval::hull(s - rem_bound, s + rem_bound);

    for (long j = 0; j < m; ++j) {
      s = s - log(x + Interval::point(j, p), p);
    }
    Interval out(prec.bits);
    mpfr_set(out.lo_mut(), s.lo(), MPFR_RNDD);
    mpfr_set(out.hi_mut(), s.hi(), MPFR_RNDU);
    out.check("log_gamma");
    return out;
  }
  throw PrecisionExhausted("log_gamma: Stirling remainder did not converge");
}

inline Interval gamma_interval(const Interval& x, const Precision& prec) {
  prec.validate();
  if (!x.is_positive()) throw DomainError("gamma_interval: argument must be positive");
  Precision inner{prec.bits + 16, prec.max_subdivisions};
  Interval g = exp(log_gamma(x, inner), prec.bits);
  g.check("gamma_interval");
  return g;
}

inline Interval factorial_interval(unsigned long k, mpfr_prec_t bits) {
  return interval_from_z(factorial(k), bits);
}

// Robbins' sandwich: sqrt(2 pi k) (k/e)^k e^{1/(12k+1)} < k! < same with e^{1/(12k)}.
inline Interval robbins_lower(unsigned long k, mpfr_prec_t bits) {
  if (k == 0) throw DomainError("robbins_lower: k must be positive");
  Interval kk = Interval::point(static_cast<long>(k), bits);
  Interval two_pi_k = Interval::point(2, bits) * Interval::pi(bits) * kk;
  Interval body = sqrt(two_pi_k) * exp(kk * (log(kk) - Interval::point(1, bits)));
  Interval corr = exp(Interval::point(1, bits) / Interval::point(12 * static_cast<long>(k) + 1, bits));
  return body * corr;
}

inline Interval robbins_upper(unsigned long k, mpfr_prec_t bits) {
  if (k == 0) throw DomainError("robbins_upper: k must be positive");
  Interval kk = Interval::point(static_cast<long>(k), bits);
  Interval two_pi_k = Interval::point(2, bits) * Interval::pi(bits) * kk;
  Interval body = sqrt(two_pi_k) * exp(kk * (log(kk) - Interval::point(1, bits)));
  Interval corr = exp(Interval::point(1, bits) / Interval::point(12 * static_cast<long>(k), bits));
  return body * corr;
}

// Gamma(n/2) for integer n >= 1. Even n is a factorial; odd n uses
// Gamma(k+1/2) = (2k)! sqrt(pi) / (4^k k!).
inline Interval gamma_half(long n, mpfr_prec_t bits) {
  if (n < 1) throw DomainError("gamma_half: argument must be at least 1/2");
  if (n % 2 == 0) return factorial_interval(static_cast<unsigned long>(n / 2 - 1), bits);
  unsigned long k = static_cast<unsigned long>((n - 1) / 2);
  mpq_class c(factorial(2 * k));
  mpz_class four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
  c /= mpq_class(four_k) * mpq_class(factorial(k));
  return interval_from_q(c, bits) * sqrt(Interval::pi(bits));
}

// Wendel's inequality Gamma(x+s) <= x^s Gamma(x) for s in [0,1]; the gap is
// the left-hand slack, nonnegative on the whole strip.
inline Interval wendel_gap(const Interval& x, const Interval& s, const Precision& prec) {
  prec.validate();
  if (!x.is_positive()) throw DomainError("wendel_gap: x must be positive");
  if (mpfr_sgn(s.lo()) < 0 || mpfr_cmp_si(s.hi(), 1) > 0)
    throw DomainError("wendel_gap: s must lie in [0,1]");
  Precision inner{prec.bits + 16, prec.max_subdivisions};
  Interval lhs = pow(x, s, inner.bits) * gamma_interval(x, inner);
  Interval rhs = gamma_interval(x + s, inner);
  Interval g = lhs - rhs;
  Interval out(prec.bits);
  mpfr_set(out.lo_mut(), g.lo(), MPFR_RNDD);
  mpfr_set(out.hi_mut(), g.hi(), MPFR_RNDU);
  return out;
}

}  // namespace certnum
