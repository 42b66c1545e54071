#pragma once

#include "certnum/collar.hpp"
#include "certnum/constants.hpp"

namespace certnum {

// Lower bound for the first Kaehler-Einstein eigenvalue from the shortest
// essential multicurve length ell_sigma. The estimate splits at ell_sigma = 1:
//   ell_sigma >= 1:  min{1/(8 pi), ell_sigma^2/(32 pi^3 (g-1)^2)}
//   ell_sigma <= 1:  min{ell_sigma/(2 pi^3), 1/(52 pi^3 (g-1)^2)}
// When ell_sigma straddles 1 the minimum of both cases is returned, which is
// a valid bound whichever side the true length falls on. The split-data case
// of the source estimate needs multicurve topology that SurfaceParams does
// not carry; callers wanting the coarser all-purpose version use
// lambda1_envelope.
inline Interval lambda1_lower(const SurfaceParams& s, const Precision& prec) {
  prec.validate();
  validate_surface(s);
  if (!s.ell_sigma)
    throw MissingData("lambda1_lower: ell_sigma is required");
  const mpfr_prec_t p = prec.bits + 16;
  Interval ls = *s.ell_sigma;
  if (!ls.is_positive())
    throw RangeError("lambda1_lower: ell_sigma must be positive");

  Interval one = Interval::point(1, p);
  Interval pi = Interval::pi(p);
  Interval pi3 = pow_si(pi, 3);
  Interval gm1_sq = sqr(Interval::point(s.g - 1, p));

  Interval long_case =
      min(one / pi.scalb(3), sqr(ls) / (pi3 * gm1_sq).scalb(5));
  Interval short_case = min(ls / pi3.scalb(1),
                            one / (pi3 * gm1_sq * Interval::point(52, p)));

  Interval out;
  if (certainly_ge(ls, one)) {
    out = long_case;
  } else if (certainly_le(ls, one)) {
    out = short_case;
  } else {
    out = min(long_case, short_case);
  }
  return out.rounded_to(prec.bits);
}

// The remark's envelope bound for the Riemannian first eigenvalue,
// ell_sigma/(49 pi^2 (g-1)^2), valid without case analysis.
inline Interval lambda1_envelope(const SurfaceParams& s,
                                 const Precision& prec) {
  prec.validate();
  validate_surface(s);
  if (!s.ell_sigma)
    throw MissingData("lambda1_envelope: ell_sigma is required");
  const mpfr_prec_t p = prec.bits + 16;
  Interval ls = *s.ell_sigma;
  if (!ls.is_positive())
    throw RangeError("lambda1_envelope: ell_sigma must be positive");
  Interval pi2 = sqr(Interval::pi(p));
  Interval gm1_sq = sqr(Interval::point(s.g - 1, p));
  return (ls / (pi2 * gm1_sq * Interval::point(49, p))).rounded_to(prec.bits);
}

// Global sup-norm bound max{2 ell^{-8 pi eps} + 1, 16/5} for an eigenfunction
// with eigenvalue eps in (0, 1/(20 pi)); ell is the systole.
inline Interval eigfn_supnorm_bound(long g, const Interval& ell,
                                    const Interval& eps,
                                    const Precision& prec) {
  prec.validate();
  if (g < 2) throw DomainError("eigfn_supnorm_bound: requires g >= 2");
  if (!ell.is_positive())
    throw DomainError("eigfn_supnorm_bound: ell must be positive");
  const mpfr_prec_t p = prec.bits + 16;
  Interval pi = Interval::pi(p);
  Interval sup = Interval::point(1, p) / (pi * Interval::point(20, p));
  if (!eps.is_positive() || !certainly_lt(eps, sup))
    throw DomainError("eigfn_supnorm_bound: eps must lie inside (0, 1/(20pi))");

  Interval pow_term = exp(-(pi * eps).scalb(3) * log(ell, p), p);
  Interval val = pow_term.scalb(1) + Interval::point(1, p);
  Interval floor = interval_from_q(detail::canonical_q(16, 5), p);
  return max(val, floor).rounded_to(prec.bits);
}

// phi(C) >= max{xi1(g), xi2(g)/sys(C)}.
inline Interval phi_lower(const SurfaceParams& s, const Precision& prec) {
  prec.validate();
  validate_surface(s);
  if (!s.sys.is_positive())
    throw RangeError("phi_lower: sys must be positive");
  const mpfr_prec_t p = prec.bits + 16;
  Interval xi1 = analytic_constant(AnalyticName::Xi1, s.g, std::nullopt, prec);
  Interval xi2 = analytic_constant(AnalyticName::Xi2, s.g, std::nullopt, prec);
  return max(xi1, xi2 / s.sys).rounded_to(prec.bits);
}

// phi(C) <= 10^6 g^5 max{1, 1/sys(C)}.
inline Interval phi_upper(const SurfaceParams& s, const Precision& prec) {
  prec.validate();
  validate_surface(s);
  if (!s.sys.is_positive())
    throw RangeError("phi_upper: sys must be positive");
  const mpfr_prec_t p = prec.bits + 16;
  mpz_class coef;
  mpz_ui_pow_ui(coef.get_mpz_t(), static_cast<unsigned long>(s.g), 5);
  coef *= 1000000;
  Interval one = Interval::point(1, p);
  return (interval_from_z(coef, p) * max(one, one / s.sys))
      .rounded_to(prec.bits);
}

enum class FeMode { phi, systole };

// Lower bound for the sum of Arakelov-Green values over n pairwise-distinct
// points. The phi mode uses the xi3/xi4 tables against a known phi invariant;
// the systole mode trades phi for an explicit systole-only constant.
inline Interval fe_lower(long g, long n, FeMode mode, const SurfaceParams& s,
                         const Precision& prec) {
  prec.validate();
  if (g < 2) throw RangeError("fe_lower: requires g >= 2");
  if (n < 2) throw RangeError("fe_lower: requires n >= 2");
  const mpfr_prec_t p = prec.bits + 16;
  Interval nI = Interval::point(n, p);
  Interval nlogn = nI * log(nI, p);

  if (mode == FeMode::phi) {
    if (!s.phi)
      throw MissingData("fe_lower: mode phi requires the phi field");
    Interval xi3 =
        analytic_constant(AnalyticName::Xi3, g, std::nullopt, prec);
    Interval xi4 =
        analytic_constant(AnalyticName::Xi4, g, std::nullopt, prec);
    return (-(xi3 * nlogn + xi4 * nI) * (*s.phi)).rounded_to(prec.bits);
  }

  if (!s.sys.is_positive())
    throw MissingData("fe_lower: mode systole requires a positive sys");
  Interval one = Interval::point(1, p);
  Interval pi3 = pow_si(Interval::pi(p), 3);
  Interval gm1_cu = pow_si(Interval::point(g - 1, p), 3);
  Interval bulk = pi3 * gm1_cu * Interval::point(400, p) *
                  max(one, one / s.sys) * nI;
  return (-(nlogn.scalb(-2) + bulk)).rounded_to(prec.bits);
}

}  // namespace certnum
