#include <catch2/catch_amalgamated.hpp>

#include "certnum/spectral.hpp"

using namespace certnum;

namespace {

SurfaceParams surface(long g, const char* sys) {
  SurfaceParams s;
  s.g = g;
  s.sys = Interval::from_decimal(sys, 192);
  return s;
}

bool near(const Interval& v, const char* dec, const char* tol) {
  Interval ref = Interval::from_decimal(dec, 256);
  Interval t = Interval::from_decimal(tol, 256);
  return certainly_lt(abs(v - ref), t);
}

}  // namespace

TEST_CASE("lambda1 lower bound selects the length case") {
  Precision prec{128, 64};
  mpfr_prec_t p = 192;
  Interval pi3 = pow_si(Interval::pi(p), 3);

  SurfaceParams s = surface(2, "1.0");
  s.ell_sigma = Interval::point(1, 192);
  Interval long_case = lambda1_lower(s, prec);
  REQUIRE(overlaps(long_case, Interval::point(1, p) / pi3.scalb(5)));
  REQUIRE(near(long_case, "0.001008", "1e-6"));

  s.ell_sigma = Interval::from_decimal("0.1", 192);
  Interval short_case = lambda1_lower(s, prec);
  REQUIRE(overlaps(short_case,
                   Interval::point(1, p) / (pi3 * Interval::point(52, p))));

  // A total length enclosure straddling 1 still returns a positive bound no
  // better than either case.
  s.ell_sigma = Interval::hull(Interval::from_decimal("0.9", 192),
                               Interval::from_decimal("1.1", 192));
  Interval straddle = lambda1_lower(s, prec);
  REQUIRE(straddle.is_positive());
  REQUIRE(mpfr_cmp(straddle.hi(), long_case.hi()) <= 0);

  // Larger genus weakens the bound.
  SurfaceParams s5 = surface(5, "1.0");
  s5.ell_sigma = Interval::point(1, 192);
  REQUIRE(certainly_lt(lambda1_lower(s5, prec), long_case));

  SurfaceParams missing = surface(2, "1.0");
  REQUIRE_THROWS_AS(lambda1_lower(missing, prec), MissingData);
  missing.ell_sigma = Interval::zero(192);
  REQUIRE_THROWS_AS(lambda1_lower(missing, prec), RangeError);
}

TEST_CASE("lambda1 envelope bound") {
  Precision prec{128, 64};
  mpfr_prec_t p = 192;
  SurfaceParams s = surface(2, "1.0");
  s.ell_sigma = Interval::point(1, 192);
  Interval env = lambda1_envelope(s, prec);
  Interval ref = Interval::point(1, p) /
                 (sqr(Interval::pi(p)) * Interval::point(49, p));
  REQUIRE(overlaps(env, ref));
  REQUIRE(near(env, "0.0020678", "1e-7"));

  // The envelope scales linearly in the total length.
  s.ell_sigma = Interval::point(3, 192);
  REQUIRE(overlaps(lambda1_envelope(s, prec), ref * Interval::point(3, p)));
}

TEST_CASE("eigenfunction sup-norm bound") {
  Precision prec{128, 64};
  mpfr_prec_t p = 192;
  Interval eps = Interval::from_decimal("0.01", 192);

  // At systole 1 the power term is 3, below the floor 16/5.
  Interval at_one = eigfn_supnorm_bound(2, Interval::point(1, 192), eps, prec);
  REQUIRE(contains_q(at_one, mpq_class(16, 5)));

  Interval ell = Interval::from_decimal("0.01", 192);
  Interval small = eigfn_supnorm_bound(2, ell, eps, prec);
  Interval oracle = exp(-(Interval::pi(p) * eps).scalb(3) * log(ell, p), p)
                        .scalb(1) +
                    Interval::point(1, p);
  REQUIRE(overlaps(small, oracle));
  REQUIRE(certainly_gt(small, interval_from_q(mpq_class(16, 5), p)));

  // 0.016 certainly exceeds 1/(20 pi) = 0.0159...
  REQUIRE_THROWS_AS(
      eigfn_supnorm_bound(2, ell, Interval::from_decimal("0.016", 192), prec),
      DomainError);
  REQUIRE_THROWS_AS(
      eigfn_supnorm_bound(2, ell, Interval::zero(192), prec), DomainError);
  REQUIRE_THROWS_AS(
      eigfn_supnorm_bound(1, ell, eps, prec), DomainError);
  REQUIRE_THROWS_AS(
      eigfn_supnorm_bound(2, Interval::zero(192), eps, prec), DomainError);
}

TEST_CASE("phi invariant lower bound") {
  Precision prec{128, 64};
  Interval unit = phi_lower(surface(2, "1.0"), prec);
  REQUIRE(contains_q(unit, mpq_class(1, 6400)));

  // A tiny systole switches to the xi2/sys branch: (1/512000)/1e-4 = 5/256.
  Interval pinched = phi_lower(surface(2, "0.0001"), prec);
  REQUIRE(contains_q(pinched, mpq_class(5, 256)));

  // The advertised floor 1e-7 g^{-5/3} holds across genera.
  mpfr_prec_t p = 192;
  Interval floor_coef = Interval::from_decimal("1e-7", p);
  for (long g = 2; g <= 100; ++g) {
    SurfaceParams s;
    s.g = g;
    s.sys = Interval::point(1, 192);
    Interval lo = phi_lower(s, prec);
    REQUIRE(certainly_ge(lo, floor_coef * detail::integer_power(g, -5, 3, p)));
  }

  REQUIRE_THROWS_AS(phi_lower(surface(2, "0.0"), Precision{128, 64}), RangeError);
}

TEST_CASE("phi invariant upper bound") {
  Precision prec{128, 64};
  Interval unit = phi_upper(surface(2, "1.0"), prec);
  REQUIRE(contains_q(unit, mpq_class(32000000)));

  Interval halved = phi_upper(surface(2, "0.5"), prec);
  REQUIRE(contains_q(halved, mpq_class(64000000)));

  for (long g : {2L, 3L, 5L, 10L}) {
    for (const char* sys : {"0.1", "1.0", "10.0"}) {
      SurfaceParams s = surface(g, sys);
      REQUIRE(certainly_lt(phi_lower(s, prec), phi_upper(s, prec)));
    }
  }
}

TEST_CASE("free energy lower bounds") {
  Precision prec{128, 64};
  mpfr_prec_t p = 192;

  SurfaceParams s = surface(2, "1.0");
  s.phi = Interval::point(1, 192);
  Interval fe_phi = fe_lower(2, 2, FeMode::phi, s, prec);
  Interval log2 = log(Interval::point(2, p), p);
  Interval oracle =
      -(Interval::point(1600, p) * log2.scalb(1) +
        interval_from_z(mpz_class("19558263230"), p).scalb(1));
  REQUIRE(overlaps(fe_phi, oracle));
  REQUIRE(near(fe_phi, "-3.91165e10", "1e5"));

  Interval fe_sys = fe_lower(2, 2, FeMode::systole, s, prec);
  Interval sys_oracle = -(log2.scalb(-1) +
                          Interval::point(800, p) * pow_si(Interval::pi(p), 3));
  REQUIRE(overlaps(fe_sys, sys_oracle));
  REQUIRE(near(fe_sys, "-24805.37", "1e-2"));

  // Coefficient envelopes xi3 <= 4000 g^{1/3} and xi4 <= 1.32e10 g^{11/3}
  // keep the phi-mode bound explicit through g = 50.
  for (long g = 2; g <= 50; ++g) {
    Interval xi3 = analytic_constant(AnalyticName::Xi3, g, std::nullopt, prec);
    Interval xi4 = analytic_constant(AnalyticName::Xi4, g, std::nullopt, prec);
    // The g >= 5 row equals the envelope, so only a certain violation fails.
    REQUIRE_FALSE(certainly_gt(xi3, Interval::point(4000, p) *
                                        detail::integer_power(g, 1, 3, p)));
    REQUIRE(certainly_le(xi4, Interval::from_decimal("1.32e10", p) *
                                  detail::integer_power(g, 11, 3, p)));
  }

  SurfaceParams no_phi = surface(2, "1.0");
  REQUIRE_THROWS_AS(fe_lower(2, 2, FeMode::phi, no_phi, prec), MissingData);
  SurfaceParams zero_sys = surface(2, "1.0");
  zero_sys.sys = Interval::zero(192);
  REQUIRE_THROWS_AS(fe_lower(2, 2, FeMode::systole, zero_sys, prec), MissingData);
  REQUIRE_THROWS_AS(fe_lower(1, 2, FeMode::phi, s, prec), RangeError);
  REQUIRE_THROWS_AS(fe_lower(2, 1, FeMode::phi, s, prec), RangeError);
}
