#pragma once

#include "certnum/gamma.hpp"
#include "certnum/quadrature.hpp"

namespace certnum {

struct CapVolume {
  Interval sphere;
  Interval cap;
};

// vol(S^{n-1}) = 2 pi^{n/2} / Gamma(n/2), with the half-integer gamma taken
// in closed form.
inline Interval sphere_volume(long n, mpfr_prec_t bits) {
  if (n < 1) throw DomainError("sphere_volume: dimension must be positive");
  Interval pi = Interval::pi(bits + 16);
  Interval pi_pow =
      (n % 2 == 0) ? pow_si(pi, n / 2) : pow_si(pi, (n - 1) / 2) * sqrt(pi);
  Interval r = pi_pow.scalb(1) / gamma_half(n, bits + 16);
  Interval out(bits);
  mpfr_set(out.lo_mut(), r.lo(), MPFR_RNDD);
  mpfr_set(out.hi_mut(), r.hi(), MPFR_RNDU);
  return out;
}

// Measure of the spherical cap of angular radius theta on S^{n-1}:
// vol(S^{n-2}) * int_0^theta sin^{n-2} t dt for n >= 2; a cap in S^0 is a
// single point of measure 1.
inline CapVolume cap_volume(long n, const Interval& theta, const Precision& prec) {
  prec.validate();
  if (n < 1) throw DomainError("cap_volume: dimension must be positive");
  if (mpfr_sgn(theta.lo()) < 0)
    throw DomainError("cap_volume: theta must be nonnegative");
  if (certainly_gt(theta, Interval::pi(prec.bits + 16)))
    throw DomainError("cap_volume: theta exceeds pi");

  CapVolume out;
  out.sphere = sphere_volume(n, prec.bits);
  if (n == 1) {
    out.cap = Interval::point(1, prec.bits);
    return out;
  }

  const mpfr_prec_t p = prec.bits + 16;
  long e = n - 2;
  Integrand f{
      [e, p](const Interval& x) { return pow_si(sin(x, p), e); },
      [e](const Series& x) { return pow_si(sin(x), e); },
  };
  Interval integral = quad_certified(f, Interval::zero(p), theta, prec);
  out.cap = sphere_volume(n - 1, p) * integral;
  Interval rounded(prec.bits);
  mpfr_set(rounded.lo_mut(), out.cap.lo(), MPFR_RNDD);
  mpfr_set(rounded.hi_mut(), out.cap.hi(), MPFR_RNDU);
  out.cap = rounded;
  return out;
}

}  // namespace certnum
