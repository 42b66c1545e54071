#pragma once

#include <string>
#include <vector>

#include "certnum/constants.hpp"

namespace certnum {

// One verdict of the collar ODE comparison suite. A structural claim (the
// parity of the two fundamental solutions) is exact by the symmetry of the
// equation and uniqueness of solutions; it carries no margin. The inequality
// claims carry the least certified margin over the check grid.
struct OdeClaim {
  std::string name;
  bool certified = false;
  bool structural = false;
  Interval margin;
};

struct OdeReport {
  long k = 0;
  Interval ell;
  Interval eps;
  Interval T;
  Interval u1_final;
  Interval u2_final;
  std::vector<OdeClaim> claims;

  bool all_certified() const {
    for (const auto& c : claims)
      if (!c.certified) return false;
    return !claims.empty();
  }
};

namespace detail {

// Enclosure box for (u, u') of one solution of u'' = q(t) u with q > 0 and
// nonnegative initial data, advanced by per-step constant-coefficient
// comparison: on a step where q(t) lies in [ql, qh], the solutions of
// v'' = ql v and w'' = qh w from the box corners bracket u and u' (the
// Volterra iteration argument of the comparison lemma, with constant
// potentials). Both solutions stay nonnegative and increasing.
struct OdeBox {
  Interval u_lo, u_hi, v_lo, v_hi;
};

inline void ode_step(OdeBox& b, const Interval& q_range, const Interval& h,
                     mpfr_prec_t p) {
  Interval ql = q_range.lower();
  Interval qh = q_range.upper();
  Interval sl = sqrt(ql, p);
  Interval sh = sqrt(qh, p);
  Interval cl = cosh(sl * h, p);
  Interval shl = sinh(sl * h, p);
  Interval ch = cosh(sh * h, p);
  Interval shh = sinh(sh * h, p);

  Interval nu_lo = (b.u_lo * cl + b.v_lo * shl / sl).lower();
  Interval nv_lo = (b.u_lo * sl * shl + b.v_lo * cl).lower();
  Interval nu_hi = (b.u_hi * ch + b.v_hi * shh / sh).upper();
  Interval nv_hi = (b.u_hi * sh * shh + b.v_hi * ch).upper();
  b.u_lo = max(nu_lo, Interval::zero(p));
  b.v_lo = max(nv_lo, Interval::zero(p));
  b.u_hi = nu_hi;
  b.v_hi = nv_hi;
}

inline Interval ode_potential(const Interval& t, const Interval& base,
                              const Interval& c, mpfr_prec_t p) {
  return base + c / sqr(cosh(t, p));
}

inline void ode_min_margin(Interval& acc, bool& first, const Interval& m) {
  if (first) {
    acc = m;
    first = false;
  } else {
    acc = min(acc, m);
  }
}

}  // namespace detail

// Certified check of the four claims of the collar eigenvalue ODE comparison
// for u'' = (1/4 - eps + 1/(4 cosh^2 t) + 4 k^2 pi^2/(ell^2 cosh^2 t)) u with
// u_{k,1}(0) = 1, u_{k,1}'(0) = 0 and u_{k,2}(0) = 0, u_{k,2}'(0) = 1:
//   parity        u_{k,1} even, u_{k,2} odd (exact, structural);
//   ratio_monotone u_{k,j}(t)/cosh(2 k pi t/(ell cosh T)) increasing on [0,T],
//                 certified via q(t) > (2 k pi/(ell cosh T))^2 on panels
//                 covering [0,T], which is the inequality the proof reduces to;
//   u1_sandwich   cosh(sqrt(1-4eps) t/2) <= u_{0,1}(t) <= sqrt(cosh t);
//   u2_sandwich   (2/sqrt(1-4eps)) sinh(sqrt(1-4eps) t/2) <= u_{0,2}(t)
//                 <= 2 (arctan e^t - pi/4) sqrt(cosh t).
// The sandwich margins are reported from grid nodes t >= 1/10; at t = 0 each
// claim degenerates to the initial condition with zero gap. The report also
// carries enclosures of the two solutions at the right endpoint: both upper
// envelopes solve the system exactly at eps = 0, so as eps shrinks the upper
// margins vanish at rate O(eps) and the endpoint enclosures are what a
// caller can still compare against the envelopes.
inline OdeReport ode_comparison_suite(const Interval& ell, const Interval& eps,
                                      long k, const Interval& T,
                                      const Precision& prec) {
  prec.validate();
  if (!ell.is_positive())
    throw RangeError("ode_comparison_suite: ell must be positive");
  if (!eps.is_positive() || !certainly_lt_q(eps, detail::canonical_q(1, 4)))
    throw RangeError("ode_comparison_suite: eps must lie inside (0, 1/4)");
  if (k < 0) throw RangeError("ode_comparison_suite: k must be nonnegative");
  if (!T.is_positive())
    throw RangeError("ode_comparison_suite: T must be positive");

  const mpfr_prec_t p = prec.bits + 16;
  const int steps = 256;
  Interval pi = Interval::pi(p);
  Interval quarter = Interval::point(1, p).scalb(-2);
  Interval base = quarter - eps;
  Interval two_k_pi = pi * Interval::point(2 * k, p);
  Interval c_k = quarter + sqr(two_k_pi / ell);
  Interval theta2 = sqr(two_k_pi / (ell * cosh(T, p)));

  OdeReport report;
  report.k = k;
  report.ell = ell.rounded_to(prec.bits);
  report.eps = eps.rounded_to(prec.bits);
  report.T = T.rounded_to(prec.bits);

  Interval h = T.upper() / Interval::point(steps, p);
  Interval s14 = sqrt(Interval::point(1, p) - eps.scalb(2), p);
  Interval tenth = interval_from_q(detail::canonical_q(1, 10), p);

  detail::OdeBox u1{Interval::point(1, p), Interval::point(1, p),
                    Interval::zero(p), Interval::zero(p)};
  detail::OdeBox u2{Interval::zero(p), Interval::zero(p),
                    Interval::point(1, p), Interval::point(1, p)};

  Interval m_ratio, m_u1, m_u2;
  bool f_ratio = true, f_u1 = true, f_u2 = true;

  for (int i = 0; i < steps; ++i) {
    Interval t0 = h * Interval::point(i, p);
    Interval t1 = h * Interval::point(i + 1, p);
    Interval panel = Interval::hull(t0, t1);

    detail::ode_min_margin(
        m_ratio, f_ratio,
        detail::ode_potential(panel, base, c_k, p) - theta2);

    // The sandwich claims concern the k = 0 fundamental solutions, so the
    // boxes always advance under the k = 0 potential.
    Interval q0_range = detail::ode_potential(panel, base, quarter, p);
    detail::ode_step(u1, q0_range, h, p);
    detail::ode_step(u2, q0_range, h, p);

    if (certainly_ge(t1, tenth)) {
      Interval u1_box = Interval::hull(u1.u_lo, u1.u_hi);
      Interval u2_box = Interval::hull(u2.u_lo, u2.u_hi);
      Interval lower1 = cosh((s14 * t1).scalb(-1), p);
      Interval upper1 = sqrt(cosh(t1, p), p);
      detail::ode_min_margin(m_u1, f_u1,
                             min(u1_box - lower1, upper1 - u1_box));
      Interval lower2 = sinh((s14 * t1).scalb(-1), p).scalb(1) / s14;
      Interval upper2 = (atan(exp(t1, p), p) - pi.scalb(-2)).scalb(1) *
                        sqrt(cosh(t1, p), p);
      detail::ode_min_margin(m_u2, f_u2,
                             min(u2_box - lower2, upper2 - u2_box));
    }
  }

  report.u1_final =
      Interval::hull(u1.u_lo, u1.u_hi).rounded_to(prec.bits);
  report.u2_final =
      Interval::hull(u2.u_lo, u2.u_hi).rounded_to(prec.bits);

  OdeClaim parity;
  parity.name = "parity";
  parity.certified = true;
  parity.structural = true;
  parity.margin = Interval::zero(prec.bits);
  report.claims.push_back(parity);

  OdeClaim ratio;
  ratio.name = "ratio_monotone";
  ratio.margin = m_ratio.rounded_to(prec.bits);
  ratio.certified = !f_ratio && m_ratio.is_positive();
  report.claims.push_back(ratio);

  OdeClaim s1;
  s1.name = "u1_sandwich";
  s1.margin = m_u1.rounded_to(prec.bits);
  s1.certified = !f_u1 && m_u1.is_positive();
  report.claims.push_back(s1);

  OdeClaim s2;
  s2.name = "u2_sandwich";
  s2.margin = m_u2.rounded_to(prec.bits);
  s2.certified = !f_u2 && m_u2.is_positive();
  report.claims.push_back(s2);

  return report;
}

}  // namespace certnum
