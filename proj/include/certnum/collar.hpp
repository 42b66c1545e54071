#pragma once

#include <optional>

#include "certnum/elementary.hpp"
#include "certnum/rational.hpp"

namespace certnum {

// Half-width collar data of a closed geodesic of length ell on a hyperbolic
// surface, together with the annulus model of the collar in the Kahler
// coordinate: the collar is {e^{nu - 2 pi^2/ell} < |z| < e^{-nu}} and the
// geodesic sits on |z| = e^{-pi^2/ell}, where nu solves
// nu ell = 2 pi arcsin(tanh(ell/2)).
struct CollarGeometry {
  Interval ell;
  Interval width;
  Interval nu;
  Interval inner_radius;
  Interval outer_radius;
  Interval geodesic_radius;
  // False when ell certainly exceeds 2 arcsinh 1; the annulus estimates are
  // quoted only up to that length, and an enclosure of the endpoint itself
  // stays accepted.
  bool standard_range = false;
};

// Surface-level inputs. sys is the systole of the Kahler-Einstein normalized
// metric; ell_sigma the total length of a minimal separating multicurve; phi
// an externally supplied value of the phi-invariant. sys and ell_sigma are
// independent inputs, neither is inferred from the other.
struct SurfaceParams {
  long g = 2;
  Interval sys;
  std::optional<Interval> ell_sigma;
  std::optional<Interval> phi;
};

inline void validate_surface(const SurfaceParams& s) {
  if (s.g < 2) throw RangeError("SurfaceParams: genus must be >= 2");
  if (mpfr_sgn(s.sys.hi()) <= 0)
    throw RangeError("SurfaceParams: systole must be positive");
}

inline CollarGeometry collar_from_length(const Interval& ell, const Precision& prec) {
  prec.validate();
  if (!ell.is_positive())
    throw DomainError("collar_from_length: ell must be positive");
  mpfr_prec_t p = prec.bits + 16;
  Interval half = ell.scalb(-1);
  Interval pi = Interval::pi(p);
  Interval pi2_over_ell = sqr(pi) / ell;

  CollarGeometry geom;
  geom.ell = ell.rounded_to(prec.bits);
  geom.width = asinh(Interval::point(1, p) / sinh(half, p), p).rounded_to(prec.bits);
  Interval nu = pi.scalb(1) * asin(tanh(half, p), p) / ell;
  geom.nu = nu.rounded_to(prec.bits);
  geom.inner_radius = exp(nu - pi2_over_ell.scalb(1), p).rounded_to(prec.bits);
  geom.geodesic_radius = exp(-pi2_over_ell, p).rounded_to(prec.bits);
  geom.outer_radius = exp(-nu, p).rounded_to(prec.bits);
  Interval two_asinh1 = asinh(Interval::point(1, p), p).scalb(1);
  geom.standard_range = !certainly_gt(ell, two_asinh1);
  return geom;
}

// Injectivity radius at distance d from the geodesic inside its collar:
// sinh inj = sinh(ell/2) cosh d.
inline Interval collar_inj_radius(const CollarGeometry& geom, const Interval& d,
                                  const Precision& prec) {
  prec.validate();
  if (mpfr_sgn(d.hi()) < 0)
    throw RangeError("collar_inj_radius: distance must be nonnegative");
  if (certainly_gt(d, geom.width))
    throw RangeError("collar_inj_radius: distance exceeds the collar width");
  mpfr_prec_t p = prec.bits + 16;
  Interval r = asinh(sinh(geom.ell.scalb(-1), p) * cosh(d, p), p);
  return r.rounded_to(prec.bits);
}

// Hyperbolic distance, in the annulus model of the collar, from a point at
// radius |z0| to the circle of radius varsigma0, for
// e^{-pi^2/ell} <= |z0| <= varsigma0 < e^{-nu}:
// log(tan(-ell log|z0| / 4pi) / tan(-ell log varsigma0 / 4pi)).
// The weaker closed form log(log|z0| / log varsigma0) is certified as a lower
// bound before returning.
inline Interval collar_annulus_distance(const CollarGeometry& geom,
                                        const Interval& z0_abs,
                                        const Interval& varsigma0,
                                        const Precision& prec) {
  prec.validate();
  if (!z0_abs.is_positive() || !varsigma0.is_positive())
    throw RangeError("collar_annulus_distance: radii must be positive");
  if (certainly_lt(z0_abs, geom.geodesic_radius))
    throw RangeError("collar_annulus_distance: |z0| below the geodesic radius");
  if (certainly_gt(z0_abs, varsigma0))
    throw RangeError("collar_annulus_distance: requires |z0| <= varsigma0");
  if (certainly_ge(varsigma0, geom.outer_radius))
    throw RangeError("collar_annulus_distance: varsigma0 outside the collar");

  mpfr_prec_t p = prec.bits + 16;
  Interval four_pi = Interval::pi(p).scalb(2);
  Interval a0 = -(geom.ell * log(z0_abs, p)) / four_pi;
  Interval a1 = -(geom.ell * log(varsigma0, p)) / four_pi;
  Interval value = log(tan(a0, p) / tan(a1, p), p);
  if (certainly_le(z0_abs, varsigma0))
    value = max(value, Interval::zero(p));

  Interval stated = log(log(z0_abs, p) / log(varsigma0, p), p);
  if (certainly_lt(value, stated))
    throw CertificationFailed(
        "collar_annulus_distance: stated lower bound refuted");
  return value.rounded_to(prec.bits);
}

// Squared modulus |a_k|^2 of the k-th coefficient of the local orthonormal
// basis on the collar annulus: 1/(4 pi (pi^2/ell - nu)) for k = -1 and
// (k+1) e^{2(k+1)nu} / (pi (1 - e^{4(k+1)(nu - pi^2/ell)})) otherwise.
inline Interval local_basis_norm(const CollarGeometry& geom, long k,
                                 const Precision& prec) {
  prec.validate();
  mpfr_prec_t p = prec.bits + 16;
  Interval two_asinh1 = asinh(Interval::point(1, p), p).scalb(1);
  if (certainly_gt(geom.ell, two_asinh1))
    throw DomainError("local_basis_norm: requires ell <= 2 arcsinh 1");
  Interval pi = Interval::pi(p);
  Interval defect = sqr(pi) / geom.ell - geom.nu;
  if (!defect.is_positive())
    throw DomainError("local_basis_norm: pi^2/ell - nu not certified positive");
  if (k == -1)
    return (Interval::point(1, p) / (pi.scalb(2) * defect)).rounded_to(prec.bits);
  Interval m = Interval::point(k + 1, p);
  Interval num = m * exp((m * geom.nu).scalb(1), p);
  Interval den =
      pi * (Interval::point(1, p) - exp((m * (-defect)).scalb(2), p));
  return (num / den).rounded_to(prec.bits);
}

}  // namespace certnum
