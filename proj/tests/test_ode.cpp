#include <catch2/catch_amalgamated.hpp>

#include "certnum/ode.hpp"

using namespace certnum;

namespace {

Interval q_iv(long n, long d, mpfr_prec_t bits = 160) {
  return interval_from_q(detail::canonical_q(n, d), bits);
}

const OdeClaim& claim_named(const OdeReport& rep, const char* name) {
  for (const auto& c : rep.claims)
    if (c.name == name) return c;
  FAIL("missing claim");
  return rep.claims.front();
}

}  // namespace

TEST_CASE("comparison suite certifies on the acceptance grid") {
  Precision prec{128, 64};
  Interval T = Interval::point(3, 160);
  std::vector<Interval> lengths = {Interval::point(1, 160),
                                   asinh(Interval::point(1, 160), 160).scalb(1)};
  for (const auto& ell : lengths) {
    for (auto [n, d] : {std::pair<long, long>{1, 100}, {1, 10}, {6, 25}}) {
      for (long k = 0; k <= 2; ++k) {
        OdeReport rep = ode_comparison_suite(ell, q_iv(n, d), k, T, prec);
        REQUIRE(rep.all_certified());
        REQUIRE(rep.claims.size() == 4);
        for (const char* name :
             {"ratio_monotone", "u1_sandwich", "u2_sandwich"}) {
          const OdeClaim& c = claim_named(rep, name);
          REQUIRE(c.certified);
          REQUIRE(c.margin.is_positive());
        }
        REQUIRE(claim_named(rep, "parity").structural);
      }
    }
  }
}

TEST_CASE("sandwich margins shrink with epsilon") {
  Precision prec{128, 64};
  Interval ell = Interval::point(1, 160);
  Interval T = Interval::point(3, 160);
  OdeReport wide = ode_comparison_suite(ell, q_iv(1, 10), 0, T, prec);
  OdeReport slim = ode_comparison_suite(ell, q_iv(1, 100), 0, T, prec);
  REQUIRE(certainly_gt(claim_named(wide, "u1_sandwich").margin,
                       claim_named(slim, "u1_sandwich").margin));
  REQUIRE(certainly_gt(claim_named(wide, "u2_sandwich").margin,
                       claim_named(slim, "u2_sandwich").margin));
}

TEST_CASE("fundamental solutions start at the initial conditions") {
  Precision prec{128, 64};
  Interval ell = Interval::point(1, 160);
  Interval tiny = q_iv(1, 1000000000);
  OdeReport rep = ode_comparison_suite(ell, q_iv(1, 10), 0, tiny, prec);
  Interval tol = Interval::from_decimal("1e-6", 160);
  REQUIRE(certainly_lt(abs(rep.u1_final - Interval::point(1, 160)), tol));
  REQUIRE(certainly_lt(abs(rep.u2_final), tol));
}

TEST_CASE("degenerate epsilon pins the upper envelopes") {
  Precision prec{128, 64};
  mpfr_prec_t p = 192;
  Interval ell = Interval::point(1, p);
  Interval eps = q_iv(1, 1000000, p);
  Interval T = Interval::point(2, p);
  OdeReport rep = ode_comparison_suite(ell, eps, 0, T, prec);

  // The monotonicity and parity claims are insensitive to epsilon.
  REQUIRE(claim_named(rep, "ratio_monotone").certified);
  REQUIRE(claim_named(rep, "parity").certified);

  // As epsilon -> 0 the upper envelopes sqrt(cosh t) and
  // 2(arctan e^t - pi/4) sqrt(cosh t) become the exact solutions, so the
  // final values land on them while staying above the lower envelopes.
  Interval s14 = sqrt(Interval::point(1, p) - eps.scalb(2), p);
  Interval u1_lower = cosh(s14, p);
  Interval u1_upper = sqrt(cosh(T, p), p);
  REQUIRE(certainly_gt(rep.u1_final, u1_lower));
  Interval hundredth = Interval::from_decimal("0.01", p);
  REQUIRE(certainly_lt(abs(rep.u1_final - u1_upper), hundredth));

  Interval u2_lower = sinh(s14, p).scalb(1) / s14;
  Interval u2_upper = (atan(exp(T, p), p) - Interval::pi(p).scalb(-2)).scalb(1) *
                      sqrt(cosh(T, p), p);
  REQUIRE(certainly_gt(rep.u2_final, u2_lower));
  REQUIRE(certainly_lt(abs(rep.u2_final - u2_upper), hundredth));
}

TEST_CASE("comparison suite input validation") {
  Precision prec{64, 64};
  Interval ell = Interval::point(1, 160);
  Interval T = Interval::point(1, 160);
  Interval eps = q_iv(1, 10);
  REQUIRE_THROWS_AS(ode_comparison_suite(ell, q_iv(3, 10), 0, T, prec), RangeError);
  REQUIRE_THROWS_AS(ode_comparison_suite(ell, q_iv(1, 4), 0, T, prec), RangeError);
  REQUIRE_THROWS_AS(ode_comparison_suite(ell, Interval::zero(160), 0, T, prec),
                    RangeError);
  Interval straddle = Interval::hull(Interval::zero(160), q_iv(1, 10));
  REQUIRE_THROWS_AS(ode_comparison_suite(ell, straddle, 0, T, prec), RangeError);
  REQUIRE_THROWS_AS(ode_comparison_suite(ell, eps, -1, T, prec), RangeError);
  REQUIRE_THROWS_AS(ode_comparison_suite(Interval::zero(160), eps, 0, T, prec),
                    RangeError);
  REQUIRE_THROWS_AS(ode_comparison_suite(ell, eps, 0, Interval::zero(160), prec),
                    RangeError);
}
