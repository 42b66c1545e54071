#pragma once

#include <Eigen/Eigenvalues>

#include <vector>

#include "certnum/elementary.hpp"
#include "certnum/interval.hpp"
#include "certnum/rational.hpp"

namespace certnum {

// Index (n, m) of the degree-m Gegenbauer polynomial attached to S^{n-1},
// lambda = (n-2)/2, together with the integers q = (2m+n-1)(2m+n-3) and
// p = q - (n-1)(n-5) controlling the oscillation bound x <= sqrt(p/q).
struct GegenbauerIndex {
  long n;
  long m;

  GegenbauerIndex(long n_, long m_) : n(n_), m(m_) {
    if (n < 2) throw DomainError("GegenbauerIndex: n must be at least 2");
    if (m < 0) throw DomainError("GegenbauerIndex: m must be nonnegative");
  }

  mpz_class q() const {
    return mpz_class(2 * m + n - 1) * mpz_class(2 * m + n - 3);
  }
  mpz_class p() const { return q() - mpz_class(n - 1) * mpz_class(n - 5); }

  Interval q_interval(mpfr_prec_t bits) const { return interval_from_z(q(), bits); }
  Interval p_interval(mpfr_prec_t bits) const { return interval_from_z(p(), bits); }

  // Oscillation bound x_{(n,m)} <= sqrt(p/q), valid for n >= 6.
  Interval sqrt_pq(mpfr_prec_t bits) const {
    if (n < 6) throw DomainError("GegenbauerIndex: sqrt(p/q) bound needs n >= 6");
    mpq_class ratio(p(), q());
    ratio.canonicalize();
    return sqrt(interval_from_q(ratio, bits + 8), bits);
  }
};

namespace detail {

// Monic three-term recurrence for Gegenbauer weight (1-x^2)^{lambda-1/2}:
// beta_k = k (k + 2 lambda - 1) / (4 (k + lambda)(k + lambda - 1)).
// With lambda = (n-2)/2 everything is rational in n. The n = 2 family
// degenerates to Chebyshev T with beta_1 = 1/2, beta_k = 1/4 afterwards.
inline std::vector<mpq_class> gegenbauer_betas(long n, long m) {
  std::vector<mpq_class> beta;
  beta.reserve(static_cast<std::size_t>(m));
  for (long k = 1; k < m; ++k) {
    if (n == 2) {
      beta.emplace_back(1, k == 1 ? 2 : 4);
      continue;
    }
    mpq_class num = mpq_class(k) * mpq_class(k + n - 3);
    mpq_class den = mpq_class(2 * k + n - 2) * mpq_class(2 * k + n - 4);
    beta.push_back(num / den);
  }
  return beta;
}

// Sign-change count of the leading-principal-minor sequence of J - xI equals
// the number of eigenvalues strictly below x. Returns -1 when some minor's
// enclosure straddles zero.
inline int sturm_count_below(const std::vector<Interval>& beta, const Interval& x) {
  mpfr_prec_t p = x.prec();
  Interval prev = Interval::point(1, p);
  Interval cur = -x;
  int changes = 0;
  int sign_prev = 1;
  for (std::size_t k = 0;; ++k) {
    int s = cur.is_positive() ? 1 : (cur.is_negative() ? -1 : 0);
    if (s == 0) return -1;
    if (s != sign_prev) ++changes;
    sign_prev = s;
    if (k == beta.size()) break;
    Interval next = -x * cur - beta[k] * prev;
    prev = cur;
    cur = next;
  }
  return changes;
}

}  // namespace detail

// Enclosure of the largest root of the degree-m Gegenbauer polynomial for
// S^{n-1}, certified by Sturm counts on a symmetric tridiagonal Jacobi matrix
// and bisected to width at most 2^(-bits/4). The floating eigensolver only
// supplies the starting guess.
inline Interval gegenbauer_largest_root(long n, long m, const Precision& prec) {
  prec.validate();
  GegenbauerIndex idx(n, m);
  if (m == 0) throw DomainError("gegenbauer_largest_root: m must be positive");
  if (m == 1) return Interval::zero(prec.bits);

  std::vector<mpq_class> beta_q = detail::gegenbauer_betas(n, m);

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd sub(m - 1);
  for (long k = 0; k < m - 1; ++k)
    sub[k] = std::sqrt(beta_q[static_cast<std::size_t>(k)].get_d());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  double guess = solver.eigenvalues().maxCoeff();

  for (mpfr_prec_t p = prec.bits + 16; p <= 8 * prec.bits + 16; p *= 2) {
    std::vector<Interval> beta;
    beta.reserve(beta_q.size());
    for (const auto& b : beta_q) beta.push_back(interval_from_q(b, p));

    auto count_at = [&](const Interval& x) { return detail::sturm_count_below(beta, x); };
    auto jittered_count = [&](Interval x) {
      for (int j = 0; j < 10; ++j) {
        int c = count_at(x);
        if (c >= 0) return std::pair<int, Interval>(c, x);
        x = x + Interval::point(1, p).scalb(-static_cast<long>(p / 2) + 4 * j);
      }
      return std::pair<int, Interval>(-1, x);
    };

    Interval lo(p), hi(p);
    mpfr_set_d(lo.lo_mut(), guess - 1e-3, MPFR_RNDD);
    mpfr_set(lo.hi_mut(), lo.lo(), MPFR_RNDU);
    mpfr_set_d(hi.lo_mut(), guess + 1e-3, MPFR_RNDD);
    mpfr_set(hi.hi_mut(), hi.lo(), MPFR_RNDU);
    if (mpfr_cmp_si(hi.lo(), 1) > 0) hi = Interval::point(1, p);

    bool bracket_ok = true;
    for (int widen = 0;; ++widen) {
      if (widen > 80) { bracket_ok = false; break; }
      auto [c, lox] = jittered_count(lo);
      if (c < 0) { bracket_ok = false; break; }
      if (c == m - 1) { lo = lox; break; }
      Interval step = Interval::point(1, p).scalb(-10 + widen / 8);
      lo = (c > m - 1) ? lo - step : lo + step;
    }
    for (int widen = 0; bracket_ok; ++widen) {
      if (widen > 80) { bracket_ok = false; break; }
      auto [c, hix] = jittered_count(hi);
      if (c < 0) { bracket_ok = false; break; }
      if (c >= m) { hi = hix; break; }
      hi = hi + Interval::point(1, p).scalb(-10 + widen / 8);
    }
    if (!bracket_ok) continue;

    long target_exp = -static_cast<long>(prec.bits / 4);
    bool fine = true;
    while (fine) {
      Interval width = hi - lo;
      if (mpfr_zero_p(width.hi()) || mpfr_get_exp(width.hi()) <= target_exp - 1) break;
      static const int num[] = {8, 7, 9, 6, 10, 5, 11};
      int c = -1;
      Interval mid(p);
      for (int cand = 0; cand < 7 && c < 0; ++cand) {
        mid = (lo + width.lower().scalb(-4) * Interval::point(num[cand], p)).mid();
        c = count_at(mid);
      }
      if (c < 0) { fine = false; break; }
      if (c >= m)
        hi = mid;
      else
        lo = mid;
    }
    if (!fine) continue;

    Interval out(prec.bits);
    mpfr_set(out.lo_mut(), lo.lo(), MPFR_RNDD);
    mpfr_set(out.hi_mut(), hi.hi(), MPFR_RNDU);
    out.check("gegenbauer_largest_root");
    if (out.width_exponent() > target_exp) continue;
    return out;
  }
  throw CertificationFailed("gegenbauer_largest_root: could not certify an enclosure");
}

inline Interval gegenbauer_largest_root(const GegenbauerIndex& idx,
                                        const Precision& prec) {
  return gegenbauer_largest_root(idx.n, idx.m, prec);
}

// Sturm certificate that the returned enclosure isolates exactly one root.
inline bool gegenbauer_root_isolated(long n, long m, const Interval& enclosure) {
  std::vector<mpq_class> beta_q = detail::gegenbauer_betas(n, m);
  mpfr_prec_t p = enclosure.prec() + 32;
  std::vector<Interval> beta;
  for (const auto& b : beta_q) beta.push_back(interval_from_q(b, p));
  Interval lo(p), hi(p);
  mpfr_set(lo.lo_mut(), enclosure.lo(), MPFR_RNDD);
  mpfr_set(lo.hi_mut(), enclosure.lo(), MPFR_RNDU);
  mpfr_set(hi.lo_mut(), enclosure.hi(), MPFR_RNDD);
  mpfr_set(hi.hi_mut(), enclosure.hi(), MPFR_RNDU);
  int below = detail::sturm_count_below(beta, lo);
  int above = detail::sturm_count_below(beta, hi);
  return below >= 0 && above >= 0 && above - below == 1;
}

}  // namespace certnum
