#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "certnum/collar.hpp"
#include "certnum/constants.hpp"
#include "certnum/quadrature.hpp"

namespace certnum {

namespace detail {

// Series of G(sqrt(s) x) around the hull's expansion point, where
// G(x) = sinh(x^2/2)/(x^2/2); obtained from the quartic expansion of G by
// scaling coefficient k with s^{k/2}. Every xi in the hull maps to
// sqrt(s) xi in the scaled seed, so the enclosure property carries over.
inline Series scaled_quartic_series(const Interval& hull, const Interval& scale_root,
                                    int order, mpfr_prec_t bits) {
  Series g = sinhc_quartic(Series::variable(hull * scale_root, order), bits);
  Series out(order, g.prec());
  Interval r = Interval::point(1, g.prec());
  for (int k = 0; k <= order; ++k) {
    out[k] = g[k] * r;
    r = r * scale_root;
  }
  return out;
}

// Reduced integrand of u(a,t) after the substitution sigma = a + eta^2 and
// after factoring the overall scale e^{-a^2/4t} out of the integral:
//   2 (a + eta^2) e^{-eta^2 (2a + eta^2)/4t} / sqrt(F_a(eta)),
//   F_a(eta) = cosh(a) (eta^2/2) G(eta)^2 + sinh(a) G(sqrt2 eta),
// using cosh(a+eta^2) - cosh(a) = eta^2 F_a(eta) and G(x) = sinh(x^2/2)/(x^2/2).
// F_a >= sinh(a) > 0, so both the value and the series stay regular at 0.
// The factored exponent eta^2 (2a + eta^2) avoids the cancellation of
// (a+eta^2)^2 - a^2 and keeps the reduced integral at unit scale, so the
// quadrature's absolute tolerance is a relative tolerance of the result.
inline Integrand heat_subst_integrand(const Interval& a, const Interval& t,
                                      mpfr_prec_t p) {
  Interval cosh_a = cosh(a, p);
  Interval sinh_a = sinh(a, p);
  Interval neg_inv4t = Interval::point(-1, p) / t.scalb(2);
  Interval sqrt2 = sqrt(Interval::point(2, p), p);
  Integrand f;
  f.value = [=](const Interval& eta) {
    Interval e2 = sqr(eta);
    Interval g1 = sinhc(e2.scalb(-1));
    Interval fa = cosh_a * e2.scalb(-1) * sqr(g1) + sinh_a * sinhc(e2);
    Interval s = a + e2;
    return (s * exp(e2 * (a.scalb(1) + e2) * neg_inv4t, p) / sqrt(fa, p))
        .scalb(1);
  };
  f.series = [=](const Series& x) {
    int n = x.order();
    Series x2 = x * x;
    Series g1 = sinhc_quartic(x, p);
    Series g2 = scaled_quartic_series(x[0], sqrt2, n, p);
    Series fa = Series::constant(cosh_a.scalb(-1), n) * x2 * g1 * g1 +
                Series::constant(sinh_a, n) * g2;
    Series s = Series::constant(a, n) + x2;
    Series e = exp(x2 * (Series::constant(a.scalb(1), n) + x2) *
                   Series::constant(neg_inv4t, n));
    return (Series::constant(Interval::point(2, p), n) * s * e) / sqrt(fa);
  };
  return f;
}

// Integrand of u(0,t) after sigma = eta^2: with cosh sigma - 1 = 2 sinh^2(sigma/2)
// the integral becomes int_0^infty 2 sqrt2 eta e^{-eta^4/4t} / G(eta) d eta.
inline Integrand heat_subst0_integrand(const Interval& t, mpfr_prec_t p) {
  Interval neg_inv4t = Interval::point(-1, p) / t.scalb(2);
  Interval two_sqrt2 = sqrt(Interval::point(2, p), p).scalb(1);
  Integrand f;
  f.value = [=](const Interval& eta) {
    Interval e2 = sqr(eta);
    return two_sqrt2 * eta * exp(sqr(e2) * neg_inv4t, p) / sinhc(e2.scalb(-1));
  };
  f.series = [=](const Series& x) {
    int n = x.order();
    Series x2 = x * x;
    Series e = exp(x2 * x2 * Series::constant(neg_inv4t, n));
    return (Series::constant(two_sqrt2, n) * x * e) / sinhc_quartic(x, p);
  };
  return f;
}

// Reduced direct sigma-space integrand
//   sigma e^{-(sigma^2 - a^2)/4t} / sqrt(cosh sigma - cosh a),
// used away from the singular endpoint (cosh a and a^2 are passed precomputed;
// a = 0 reuses it with cosh a = 1, a^2 = 0). On sigma >= a + 4 the difference
// sigma^2 - a^2 >= 8a + 16 loses no accuracy.
inline Integrand heat_direct_integrand(const Interval& cosh_a,
                                       const Interval& a_sq, const Interval& t,
                                       mpfr_prec_t p) {
  Interval neg_inv4t = Interval::point(-1, p) / t.scalb(2);
  Integrand f;
  f.value = [=](const Interval& s) {
    return s * exp((sqr(s) - a_sq) * neg_inv4t, p) /
           sqrt(cosh(s, p) - cosh_a, p);
  };
  f.series = [=](const Series& x) {
    int n = x.order();
    Series e = exp((x * x - Series::constant(a_sq, n)) *
                   Series::constant(neg_inv4t, n));
    return (x * e) / sqrt(cosh(x) - Series::constant(cosh_a, n));
  };
  return f;
}

// Cut point for the Gaussian tail: past max(subst_end, sqrt(8 t log2 (bits+32)))
// the tail enclosure c e^{-T^2/8t}/(2 lambda T) is below the quadrature budget.
inline long heat_tail_cut(double subst_end, double t_hi, int bits) {
  double cut = std::sqrt(8.0 * t_hi * 0.6931471805599453 * (bits + 32));
  return static_cast<long>(std::ceil(std::max(subst_end, cut))) + 1;
}

}  // namespace detail

// Certified enclosure of u(a,t) = int_a^infty sigma e^{-sigma^2/4t}
// (cosh sigma - cosh a)^{-1/2} d sigma for a >= 0. The overall scale
// e^{-a^2/4t} is factored out in front, the reduced integral (which stays of
// order sqrt t) is enclosed piecewise, and the factor is multiplied back at
// the end, so the quadrature tolerance acts relative to the true size even
// when e^{-a^2/4t} underflows every fixed-exponent format. The singular
// endpoint is integrated in the eta = sqrt(sigma - a) coordinate over sigma
// in [a, a+4], the middle directly in sigma, and the tail against the reduced
// Gaussian majorant c e^{-sigma^2/8t} with
// c = 2 A e^{(2a^2 - A^2)/8t} (cosh(a+4) - cosh a)^{-1/2}
// (the products sigma e^{-sigma^2/8t} and the inverse square root both
// decrease past A >= 2 sqrt t, and the factor 2 gives the domination probe
// pointwise slack).
inline Interval heat_u_integral(const Interval& a, const Interval& t,
                                const Precision& prec) {
  prec.validate();
  if (mpfr_sgn(a.lo()) < 0)
    throw RangeError("heat_u_integral: a must be nonnegative");
  if (!t.is_positive()) throw RangeError("heat_u_integral: t must be positive");
  const bool at_zero = a.is_point() && mpfr_sgn(a.lo()) == 0;
  if (!at_zero && !a.is_positive())
    throw RangeError("heat_u_integral: a must be zero or certainly positive");

  mpfr_prec_t p = prec.bits + 16;
  Interval two = Interval::point(2, p);
  Interval cosh_a = at_zero ? Interval::point(1, p) : cosh(a, p);
  Interval a_sq = at_zero ? Interval::zero(p) : sqr(a);

  Interval head;
  double subst_end;
  if (at_zero) {
    head = quad_certified(detail::heat_subst0_integrand(t, p),
                          Interval::zero(p), two, prec);
    subst_end = 4.0;
  } else {
    head = quad_certified(detail::heat_subst_integrand(a, t, p),
                          Interval::zero(p), two, prec);
    subst_end = mpfr_get_d(a.hi(), MPFR_RNDU) + 4.0;
  }

  long cut = detail::heat_tail_cut(subst_end, mpfr_get_d(t.hi(), MPFR_RNDU),
                                   static_cast<int>(prec.bits));
  Interval mid_lo = at_zero ? Interval::point(4, p) : a + Interval::point(4, p);
  Interval cut_iv = Interval::point(cut, p);
  Integrand direct = detail::heat_direct_integrand(cosh_a, a_sq, t, p);
  Interval middle = quad_certified(direct, mid_lo, cut_iv, prec);

  Interval inv8t = Interval::point(1, p) / t.scalb(3);
  Interval c = cut_iv.scalb(1) *
               exp((a_sq.scalb(1) - sqr(cut_iv)) * inv8t, p) /
               sqrt(cosh(mid_lo, p) - cosh_a, p);
  Interval tail = quad_tail(direct.value, cut_iv,
                            TailMajorant{c.upper(), inv8t.lower()}, prec);

  Interval scale = at_zero ? Interval::point(1, p)
                           : exp(-(a_sq / t.scalb(2)), p);
  return ((head + middle + tail) * scale).rounded_to(prec.bits);
}

struct HeatUBound {
  Interval u;
  Interval majorant;
};

// u(a,t) with the closed-form majorant
// (3 sqrt2/4) a e^{-a^2/4t} + (5 sqrt(2 pi t)/3) e^{-25 a^2/64 t}.
inline HeatUBound heat_u_bound(const Interval& a, const Interval& t,
                               const Precision& prec) {
  prec.validate();
  if (!a.is_positive()) throw RangeError("heat_u_bound: a must be positive");
  if (!t.is_positive()) throw RangeError("heat_u_bound: t must be positive");
  mpfr_prec_t p = prec.bits + 16;

  HeatUBound out;
  out.u = heat_u_integral(a, t, prec);

  Interval a2 = sqr(a);
  Interval first = sqrt(Interval::point(2, p), p) *
                   interval_from_q(detail::canonical_q(3, 4), p) * a *
                   exp(-(a2 / t.scalb(2)), p);
  Interval second = sqrt((Interval::pi(p) * t).scalb(1), p) *
                    interval_from_q(detail::canonical_q(5, 3), p) *
                    exp(-(a2 * interval_from_q(detail::canonical_q(25, 64), p) / t), p);
  out.majorant = (first + second).rounded_to(prec.bits);
  return out;
}

// Heat kernel of the hyperbolic plane at distance dist:
// K(dist,t) = sqrt2 e^{-t/4} (4 pi t)^{-3/2} u(dist, t).
inline Interval heat_kernel_H(const Interval& dist, const Interval& t,
                              const Precision& prec) {
  prec.validate();
  if (mpfr_sgn(dist.lo()) < 0)
    throw RangeError("heat_kernel_H: dist must be nonnegative");
  if (!t.is_positive()) throw RangeError("heat_kernel_H: t must be positive");
  mpfr_prec_t p = prec.bits + 16;
  Interval u = heat_u_integral(dist, t, prec);
  Interval b = (Interval::pi(p) * t).scalb(2);
  Interval pref = sqrt(Interval::point(2, p), p) *
                  exp(-t.scalb(-2), p) / (b * sqrt(b, p));
  return (pref * u).rounded_to(prec.bits);
}

// Diagonal bound 1 + K_hyp(x,x;t) <= 1/(2t) + 6 sqrt(g-1)/(sqrt t sys)
// + ((g-1)/100)(1 + 4 arcsinh 1 / sys) for t <= 1/(40(g-1)). Only a certainly
// violated time window is rejected, so the boundary t = 1/(40(g-1)) passes.
inline Interval diag_heat_bound(const SurfaceParams& s, const Interval& t,
                                const Precision& prec) {
  prec.validate();
  validate_surface(s);
  if (!t.is_positive()) throw RangeError("diag_heat_bound: t must be positive");
  if (certainly_gt_q(t, detail::canonical_q(1, 40 * (s.g - 1))))
    throw RangeError("diag_heat_bound: requires t <= 1/(40(g-1))");
  mpfr_prec_t p = prec.bits + 16;
  Interval gm1 = Interval::point(s.g - 1, p);
  Interval r = Interval::point(1, p) / t.scalb(1) +
               Interval::point(6, p) * sqrt(gm1, p) / (sqrt(t, p) * s.sys) +
               gm1 / Interval::point(100, p) *
                   (Interval::point(1, p) +
                    asinh(Interval::point(1, p), p).scalb(2) / s.sys);
  return r.rounded_to(prec.bits);
}

}  // namespace certnum
