#include <catch2/catch_amalgamated.hpp>

#include "certnum/cap_volume.hpp"
#include "certnum/quadrature.hpp"

using namespace certnum;

namespace {

const Precision P128{128, 64};

Integrand cubic_over(int k) {
  // t^3 / (1-t^2)^k
  return Integrand{
      [k](const Interval& x) {
        Interval one = Interval::point(1, x.prec());
        return pow_si(x, 3) / pow_si(one - sqr(x), k);
      },
      [k](const Series& x) {
        Series one = Series::constant(Interval::point(1, x.prec()), x.order());
        return pow_si(x, 3) / pow_si(one - x * x, k);
      }};
}

}  // namespace

TEST_CASE("quad reproduces a polynomial integral exactly enough") {
  Integrand f{[](const Interval& x) { return pow_si(x, 3); },
              [](const Series& x) { return pow_si(x, 3); }};
  Interval r = quad_certified(f, Interval::zero(128), Interval::point(1, 128), P128);
  REQUIRE(contains_q(r, mpq_class(1, 4)));
  REQUIRE(r.width_exponent() <= -60);
}

TEST_CASE("quad of sin over [0, pi] is 2") {
  Integrand f{[](const Interval& x) { return sin(x); },
              [](const Series& x) { return sin(x); }};
  Interval r = quad_certified(f, Interval::zero(144), Interval::pi(144), Precision{144, 64});
  REQUIRE(r.contains_si(2));
  REQUIRE(r.width_exponent() <= -64);
}

TEST_CASE("quad of exp over [0,1] matches e - 1") {
  Integrand f{[](const Interval& x) { return exp(x); },
              [](const Series& x) { return exp(x); }};
  Interval r = quad_certified(f, Interval::zero(128), Interval::point(1, 128), P128);
  Interval oracle = exp(Interval::point(1, 200), 200) - Interval::point(1, 200);
  REQUIRE(overlaps(r, oracle));
  REQUIRE(r.width_exponent() <= -60);
}

TEST_CASE("small-disc moment integrals match their closed forms") {
  mpfr_prec_t p = 160;
  Precision prec{160, 64};
  Interval sqrt2 = sqrt(Interval::point(2, p));
  Interval one = Interval::point(1, p);
  Interval upper = sqrt2 - one;  // irrational endpoint: exercises the slab path
  Interval zero = Interval::zero(p);

  Interval q0 = quad_certified(cubic_over(0), zero, upper, prec);
  Interval q1 = quad_certified(cubic_over(1), zero, upper, prec);
  Interval q2 = quad_certified(cubic_over(2), zero, upper, prec);

  Interval closed0 = pow_si(sqrt2 - one, 4) / Interval::point(4, p);
  Interval log_term = log((sqrt2 + one) / Interval::point(2, p), p);
  Interval closed1 = (sqrt2.scalb(1) - Interval::point(3, p) + log_term).scalb(-1);
  Interval closed2 = (sqrt2 - one - log_term.scalb(1)) / Interval::point(4, p);

  REQUIRE(overlaps(q0, closed0));
  REQUIRE(overlaps(q1, closed1));
  REQUIRE(overlaps(q2, closed2));
  REQUIRE(q0.width_exponent() <= -70);
  REQUIRE(q1.width_exponent() <= -70);
  REQUIRE(q2.width_exponent() <= -70);

  // reference decimals
  REQUIRE(overlaps(closed0, Interval::from_decimal("0.0073593", 64) +
                                Interval::from_endpoints("-1e-7", "1e-7", 64)));
  REQUIRE(overlaps(closed1, Interval::from_decimal("0.0083267", 64) +
                                Interval::from_endpoints("-1e-7", "1e-7", 64)));
  REQUIRE(overlaps(closed2, Interval::from_decimal("0.0094402", 64) +
                                Interval::from_endpoints("-1e-7", "1e-7", 64)));
}

TEST_CASE("interval endpoints subtract slab enclosures") {
  Integrand f{[](const Interval& x) { return Interval::point(1, x.prec()) / x; },
              [](const Series& x) {
                Series one = Series::constant(Interval::point(1, x.prec()), x.order());
                return one / x;
              }};
  Interval a = Interval::from_endpoints("1", "1.001", 128);
  Interval b = Interval::from_endpoints("2", "2.001", 128);
  Interval r = quad_certified(f, a, b, P128);
  Interval lo_case = log(Interval::from_decimal("2", 200) / Interval::from_decimal("1.001", 200));
  Interval hi_case = log(Interval::from_decimal("2.001", 200) / Interval::from_decimal("1", 200));
  REQUIRE(r.contains(lo_case));
  REQUIRE(r.contains(hi_case));
}

TEST_CASE("unreachable budget raises PrecisionExhausted") {
  Integrand f{[](const Interval& x) { return sqrt(x); },
              [](const Series& x) { return sqrt(x); }};
  Precision tight{128, 18};
  REQUIRE_THROWS_AS(
      quad_certified(f, Interval::zero(128), Interval::point(1, 128), tight),
      PrecisionExhausted);
}

TEST_CASE("quad_tail bounds a Gaussian tail and verifies domination") {
  auto f = [](const Interval& x) { return exp(-sqr(x)); };
  TailMajorant maj{Interval::from_decimal("1.1", 128), Interval::point(1, 128)};
  Interval tail = quad_tail(f, Interval::point(3, 128), maj, P128);
  REQUIRE(mpfr_sgn(tail.lo()) == 0);
  REQUIRE(mpfr_cmp_d(tail.hi(), 2.3e-5) < 0);
  // true tail ~ 1.96e-5 < bound 1.1 e^-9/6 ~ 2.26e-5
  REQUIRE(mpfr_cmp_d(tail.hi(), 1.9e-5) > 0);

  auto slow = [](const Interval& x) {
    return exp(-sqr(x) / Interval::point(100, x.prec()));
  };
  REQUIRE_THROWS_AS(quad_tail(slow, Interval::point(3, 128), maj, P128),
                    DecayUnverifiable);
}

TEST_CASE("sphere and cap volumes") {
  Precision prec{128, 64};
  Interval two_pi = Interval::pi(160).scalb(1);
  REQUIRE(overlaps(sphere_volume(2, 128), two_pi));
  REQUIRE(overlaps(sphere_volume(3, 128), Interval::pi(160).scalb(2)));
  REQUIRE(overlaps(sphere_volume(4, 128), sqr(Interval::pi(160)).scalb(1)));

  CapVolume full = cap_volume(3, Interval::pi(128), prec);
  REQUIRE(overlaps(full.cap, full.sphere));

  CapVolume half = cap_volume(2, Interval::point(1, 128), prec);
  REQUIRE(half.cap.contains_si(2));

  CapVolume pt = cap_volume(1, Interval::from_decimal("0.3", 128), prec);
  REQUIRE(pt.cap.contains_si(1));
  REQUIRE(pt.sphere.contains_si(2));

  Interval smaller = cap_volume(5, Interval::from_decimal("0.7", 128), prec).cap;
  Interval larger = cap_volume(5, Interval::from_decimal("1.1", 128), prec).cap;
  REQUIRE(certainly_lt(smaller, larger));
}

TEST_CASE("series arithmetic matches function values on point seeds") {
  // compare series coefficient 0 against direct interval evaluation
  mpfr_prec_t p = 128;
  Interval x0 = Interval::from_decimal("0.7", p);
  Series x = Series::variable(x0, 12);
  Series s = exp(sin(x) * sqrt(x + Interval::point(2, p))) / cosh(x);
  Interval direct = exp(sin(x0) * sqrt(x0 + Interval::point(2, p))) / cosh(x0);
  REQUIRE(overlaps(s[0], direct));

  // derivative of exp(x) at 0.7: coefficient 1 equals exp(0.7)
  Series e = exp(x);
  REQUIRE(overlaps(e[1], exp(x0)));

  // sinhc quartic series: G(x) = sinh(x^2/2)/(x^2/2) at x = 0.7
  Series g = sinhc_quartic(x, 128);
  Interval s_arg = sqr(x0).scalb(-1);
  Interval direct_g = sinh(s_arg) / s_arg;
  REQUIRE(overlaps(g[0], direct_g));
  REQUIRE(overlaps(sinhc(s_arg), direct_g));
}
