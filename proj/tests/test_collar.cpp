#include <catch2/catch_amalgamated.hpp>

#include "certnum/collar.hpp"

using namespace certnum;

namespace {

Interval two_asinh1(mpfr_prec_t bits = 192) {
  return asinh(Interval::point(1, bits), bits).scalb(1);
}

bool near(const Interval& v, const char* dec, const char* tol) {
  Interval ref = Interval::from_decimal(dec, 256);
  Interval t = Interval::from_decimal(tol, 256);
  return certainly_lt(abs(v - ref), t);
}

}  // namespace

TEST_CASE("collar geometry at ell = 2 arcsinh 1") {
  Precision prec{128, 64};
  CollarGeometry geom = collar_from_length(two_asinh1(), prec);
  REQUIRE(geom.standard_range);

  // sinh(ell/2) = 1, so the half-width is arcsinh 1 again.
  REQUIRE(overlaps(geom.width, asinh(Interval::point(1, 192), 192)));
  REQUIRE(near(geom.width, "0.881373587019543", "1e-12"));

  // tanh(ell/2) = 1/sqrt2 makes nu ell = pi^2/2, i.e. nu = pi^2/(4 arcsinh 1)
  // and 2 nu = pi^2/ell.
  Interval nu_ref = sqr(Interval::pi(192)) / two_asinh1().scalb(1);
  REQUIRE(overlaps(geom.nu, nu_ref));
  REQUIRE(near(geom.nu, "2.79949517054179", "1e-10"));
  Interval pi2_over_ell = sqr(Interval::pi(192)) / two_asinh1();
  REQUIRE(overlaps(geom.nu.scalb(1), pi2_over_ell));

  // sin(nu ell / 2pi) = tanh(ell/2) inverts the defining equation.
  Interval angle = geom.nu * geom.ell / Interval::pi(192).scalb(1);
  REQUIRE(overlaps(sin(angle, 192), tanh(two_asinh1().scalb(-1), 192)));

  REQUIRE(certainly_lt(geom.inner_radius, geom.geodesic_radius));
  REQUIRE(certainly_lt(geom.geodesic_radius, geom.outer_radius));
  REQUIRE(certainly_lt(geom.outer_radius, Interval::point(1, 128)));

  REQUIRE_THROWS_AS(collar_from_length(Interval::zero(128), prec), DomainError);
  Interval straddle = Interval::hull(Interval::point(-1, 128), Interval::point(1, 128));
  REQUIRE_THROWS_AS(collar_from_length(straddle, prec), DomainError);
}

TEST_CASE("nu tends to pi for short geodesics and decreases with length") {
  Precision prec{128, 64};
  CollarGeometry tiny = collar_from_length(Interval::from_decimal("0.001", 160), prec);
  Interval pi = Interval::pi(192);
  REQUIRE(certainly_lt(tiny.nu, pi));
  REQUIRE(certainly_gt(tiny.nu, pi - Interval::from_decimal("0.01", 192)));

  // Both nu and the defect pi^2/ell - nu decrease strictly on a grid
  // reaching the right endpoint 2 arcsinh 1.
  std::vector<Interval> lengths;
  for (long k = 1; k <= 10; ++k)
    lengths.push_back(interval_from_q(mpq_class(k, 6), 160));
  lengths.push_back(two_asinh1(160));
  Interval prev_nu, prev_defect;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    CollarGeometry geom = collar_from_length(lengths[i], prec);
    Interval defect = sqr(Interval::pi(192)) / geom.ell - geom.nu;
    REQUIRE(defect.is_positive());
    if (i > 0) {
      REQUIRE(certainly_gt(prev_nu, geom.nu));
      REQUIRE(certainly_gt(prev_defect, defect));
    }
    prev_nu = geom.nu;
    prev_defect = defect;
    REQUIRE(certainly_lt(geom.inner_radius, geom.geodesic_radius));
    REQUIRE(certainly_lt(geom.geodesic_radius, geom.outer_radius));
  }
}

TEST_CASE("injectivity radius along the collar") {
  Precision prec{128, 64};
  Interval one = Interval::point(1, 160);
  CollarGeometry geom = collar_from_length(one, prec);

  // At the geodesic the injectivity radius is ell/2 exactly.
  Interval at_core = collar_inj_radius(geom, Interval::zero(160), prec);
  REQUIRE(overlaps(at_core, geom.ell.scalb(-1)));
  REQUIRE(at_core.width_exponent() <= -100);

  // At the boundary cosh(width) = cosh(ell/2)/sinh(ell/2) collapses the
  // formula to arcsinh(cosh(ell/2)).
  Interval at_boundary = collar_inj_radius(geom, geom.width, prec);
  Interval boundary_ref = asinh(cosh(one.scalb(-1), 192), 192);
  REQUIRE(overlaps(at_boundary, boundary_ref));

  // A distance enclosure that merely touches negative values is accepted.
  Interval touching = Interval::hull(Interval::from_decimal("-0.1", 160),
                                     Interval::from_decimal("0.1", 160));
  REQUIRE_NOTHROW(collar_inj_radius(geom, touching, prec));

  REQUIRE_THROWS_AS(collar_inj_radius(geom, Interval::point(-1, 160), prec),
                    RangeError);
  REQUIRE_THROWS_AS(
      collar_inj_radius(geom, geom.width + Interval::point(1, 160), prec),
      RangeError);
}

TEST_CASE("annulus distance closed forms at ell = 1") {
  Precision prec{128, 64};
  Interval one = Interval::point(1, 192);
  CollarGeometry geom = collar_from_length(one, prec);
  mpfr_prec_t p = 192;

  // Same circle: the distance encloses zero and nothing else.
  Interval z = Interval::point(1, p).scalb(-13);
  Interval self = collar_annulus_distance(geom, z, z, prec);
  REQUIRE(self.contains_zero());
  REQUIRE(self.width_exponent() <= -100);

  // From the geodesic |z| = e^{-pi^2} to the circle e^{-pi^2/2} the angles
  // are pi/4 and pi/8, so the distance is log(cot(pi/8)) = log(sqrt2 + 1).
  Interval pi_sq = sqr(Interval::pi(p));
  Interval z0 = exp(-pi_sq, p);
  Interval s0 = exp(-pi_sq.scalb(-1), p);
  Interval d = collar_annulus_distance(geom, z0, s0, prec);
  Interval ref = log(sqrt(Interval::point(2, p), p) + one, p);
  REQUIRE(overlaps(d, ref));
  REQUIRE(near(d, "0.881373587019543", "1e-12"));

  // The same pair has log|z0| / log varsigma0 = 2, and the certified value
  // dominates the stated lower bound log 2.
  REQUIRE(certainly_gt(d, log(Interval::point(2, p), p)));

  // Distance from the geodesic to a circle just inside the outer boundary is
  // the collar half-width up to the perturbation.
  Interval s_near = geom.outer_radius * interval_from_q(mpq_class(1023, 1024), p);
  Interval to_edge = collar_annulus_distance(geom, geom.geodesic_radius, s_near, prec);
  REQUIRE(certainly_lt(to_edge, geom.width));
  REQUIRE(certainly_gt(to_edge, geom.width - Interval::from_decimal("0.01", p)));

  REQUIRE_THROWS_AS(
      collar_annulus_distance(geom, geom.inner_radius, s0, prec), RangeError);
  REQUIRE_THROWS_AS(collar_annulus_distance(geom, s0, z0, prec), RangeError);
  REQUIRE_THROWS_AS(
      collar_annulus_distance(geom, z0, geom.outer_radius.scalb(1), prec),
      RangeError);
  REQUIRE_THROWS_AS(
      collar_annulus_distance(geom, Interval::zero(p), s0, prec), RangeError);
}

TEST_CASE("injectivity radius at |z| = e^{-2nu} clears arcsinh(1/2)") {
  Precision prec{128, 64};
  mpfr_prec_t p = 192;
  for (const char* len : {"0.25", "0.5", "1.0", "1.5"}) {
    CollarGeometry geom = collar_from_length(Interval::from_decimal(len, p), prec);
    Interval z0 = exp(-geom.nu.scalb(1), p);
    Interval d = collar_annulus_distance(geom, geom.geodesic_radius, z0, prec);
    Interval inj = collar_inj_radius(geom, d, prec);
    Interval half = asinh(Interval::point(1, p).scalb(-1), p);
    REQUIRE(certainly_ge(inj, half));
  }
}

TEST_CASE("local basis norms on the collar annulus") {
  Precision prec{128, 64};
  CollarGeometry geom = collar_from_length(two_asinh1(), prec);
  mpfr_prec_t p = 192;

  // With 2 nu = pi^2/ell the k = -1 norm 1/(4 pi nu) equals arcsinh(1)/pi^3.
  Interval m1 = local_basis_norm(geom, -1, prec);
  Interval ref = asinh(Interval::point(1, p), p) / pow_si(Interval::pi(p), 3);
  REQUIRE(overlaps(m1, ref));
  REQUIRE(near(m1, "0.0284256", "1e-6"));

  Interval m0 = local_basis_norm(geom, 0, prec);
  Interval defect = sqr(Interval::pi(p)) / geom.ell - geom.nu;
  Interval m0_ref = exp(geom.nu.scalb(1), p) /
                    (Interval::pi(p) *
                     (Interval::point(1, p) - exp(-defect.scalb(2), p)));
  REQUIRE(overlaps(m0, m0_ref));

  for (long k = -5; k <= 5; ++k) {
    Interval norm = local_basis_norm(geom, k, prec);
    REQUIRE(norm.is_positive());
    REQUIRE(norm.is_finite());
  }

  CollarGeometry wide = collar_from_length(Interval::point(2, p), prec);
  REQUIRE_FALSE(wide.standard_range);
  REQUIRE_THROWS_AS(local_basis_norm(wide, -1, prec), DomainError);
}

TEST_CASE("surface parameter validation") {
  SurfaceParams ok;
  ok.g = 2;
  ok.sys = Interval::point(1, 128);
  REQUIRE_NOTHROW(validate_surface(ok));

  SurfaceParams low_genus = ok;
  low_genus.g = 1;
  REQUIRE_THROWS_AS(validate_surface(low_genus), RangeError);

  SurfaceParams bad_sys = ok;
  bad_sys.sys = Interval::zero(128);
  REQUIRE_THROWS_AS(validate_surface(bad_sys), RangeError);
}
