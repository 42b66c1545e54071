#pragma once

#include <map>
#include <string>

#include "certnum/collar.hpp"
#include "certnum/constants.hpp"

namespace certnum {

namespace detail {

inline const Interval& reg_param(const std::map<std::string, Interval>& params,
                                 const char* key, const char* who) {
  auto it = params.find(key);
  if (it == params.end())
    throw MissingData(std::string(who) + ": missing parameter " + key);
  return it->second;
}

inline long reg_integer(const std::map<std::string, Interval>& params,
                        const char* key, long least, const char* who) {
  const Interval& v = reg_param(params, key, who);
  if (!v.is_point() || !mpfr_integer_p(v.lo()) ||
      !mpfr_fits_slong_p(v.lo(), MPFR_RNDN))
    throw DomainError(std::string(who) + ": " + key +
                      " must be an exact integer");
  long n = mpfr_get_si(v.lo(), MPFR_RNDN);
  if (n < least)
    throw RangeError(std::string(who) + ": " + key + " must be at least " +
                     std::to_string(least));
  return n;
}

inline long reg_genus(const std::map<std::string, Interval>& params,
                      const char* who) {
  return reg_integer(params, "g", 2, who);
}

// pi (1 - e^{-3 pi}), the shared denominator of the collar estimates.
inline Interval collar_norm(mpfr_prec_t p) {
  Interval pi = Interval::pi(p);
  return pi * (Interval::point(1, p) - exp(-pi * Interval::point(3, p), p));
}

inline void collar_membership(const CollarGeometry& geom, const Interval& z,
                              const char* who) {
  if (certainly_lt(z, geom.inner_radius) ||
      certainly_gt(z, geom.outer_radius))
    throw RangeError(std::string(who) +
                     ": |z| certainly outside the collar annulus");
}

}  // namespace detail

// Named evaluation of the closed-form estimates of the arithmetic part that
// are single formulas rather than algorithms. Each entry takes its inputs
// from the params map under stable snake_case keys and returns the formula
// value as an interval at the requested precision.
inline Interval part2_bound_registry(const std::string& name,
                                     const std::map<std::string, Interval>& params,
                                     const Precision& prec) {
  prec.validate();
  const mpfr_prec_t p = prec.bits + 16;
  Interval one = Interval::point(1, p);
  Interval pi = Interval::pi(p);
  Interval out(p);

  if (name == "bergman_sup") {
    long g = detail::reg_genus(params, "bergman_sup");
    long n = detail::reg_integer(params, "n", 1, "bergman_sup");
    Interval phi = detail::reg_param(params, "phi", "bergman_sup");
    Interval xi1 = analytic_constant(AnalyticName::Xi1, g, std::nullopt, prec);
    Interval xi2 = analytic_constant(AnalyticName::Xi2, g, std::nullopt, prec);
    Interval ratio =
        interval_from_q(detail::canonical_q(n, 8 * g), p);
    out = ratio * (one / xi1 + Interval::point(2, p) / xi2) * phi;
  } else if (name == "lambda1_phi") {
    long g = detail::reg_genus(params, "lambda1_phi");
    Interval phi = detail::reg_param(params, "phi", "lambda1_phi");
    Interval xi2 = analytic_constant(AnalyticName::Xi2, g, std::nullopt, prec);
    Interval pi3 = pow_si(pi, 3);
    Interval gm1 = Interval::point(g - 1, p);
    out = Interval::point(385, p) * pi3 * gm1 * phi / xi2;
    if (params.count("sys")) {
      const Interval& sys = params.at("sys");
      if (!sys.is_positive())
        throw RangeError("lambda1_phi: sys must be positive");
      out = min(out, Interval::point(98, p) * pi3 * sqr(gm1) / sys);
    }
  } else if (name == "small_eig_sum") {
    long g = detail::reg_genus(params, "small_eig_sum");
    long n = detail::reg_integer(params, "n", 1, "small_eig_sum");
    Interval gm1 = Interval::point(g - 1, p);
    Interval pref = Interval::point(616, p) * pow_si(pi, 3) * gm1 *
                    Interval::point(2 * g - 3, p) * Interval::point(n, p);
    bool have_phi = params.count("phi") != 0;
    bool have_sys = params.count("sys") != 0;
    if (!have_phi && !have_sys)
      throw MissingData("small_eig_sum: needs phi or sys");
    Interval branch(p);
    bool first = true;
    if (have_phi) {
      Interval xi2 =
          analytic_constant(AnalyticName::Xi2, g, std::nullopt, prec);
      branch = params.at("phi") / xi2;
      first = false;
    }
    if (have_sys) {
      const Interval& sys = params.at("sys");
      if (!sys.is_positive())
        throw RangeError("small_eig_sum: sys must be positive");
      Interval alt = interval_from_q(detail::canonical_q(14 * (g - 1), 55), p) *
                     max(one, sys) / sys;
      branch = first ? alt : min(branch, alt);
    }
    out = pref * branch;
  } else if (name == "thick_phi") {
    long g = detail::reg_genus(params, "thick_phi");
    Interval b0 = detail::reg_param(params, "b0_sup", "thick_phi");
    Interval combo = disc_integral_combo(g, prec.bits);
    out = interval_from_q(detail::canonical_q(32 * g, g - 1), p) * sqr(pi) *
          sqr(b0) * combo;
  } else if (name == "sep_phi") {
    long g = detail::reg_genus(params, "sep_phi");
    Interval g1 = detail::reg_param(params, "g1_prime", "sep_phi");
    Interval g2 = detail::reg_param(params, "g2_prime", "sep_phi");
    Interval sl = detail::reg_param(params, "sum_ell", "sep_phi");
    if (!sl.is_positive())
      throw RangeError("sep_phi: sum_ell must be positive");
    Interval cap = one / (log(Interval::point(g, p), p) * Interval::point(6, p));
    if (certainly_gt(sl, cap))
      throw RangeError("sep_phi: sum_ell certainly exceeds 1/(6 log g)");
    Interval pi2 = sqr(pi);
    Interval leak = exp(Interval::point(15, p) - pi2 / sl, p) *
                    interval_from_q(detail::canonical_q(2, g), p);
    Interval share = (g1 + g2) / Interval::point(g * g, p);
    out = pi2 * g1 * g2 / sl * (share - leak);
  } else if (name == "nonsep_W12") {
    long g = detail::reg_genus(params, "nonsep_W12");
    Interval ell = detail::reg_param(params, "ell", "nonsep_W12");
    Interval t = detail::reg_param(params, "t_gamma", "nonsep_W12");
    CollarGeometry geom = collar_from_length(ell, prec);
    if (!geom.standard_range)
      throw RangeError("nonsep_W12: ell must satisfy ell <= 2 arcsinh 1");
    Interval defect = sqr(pi) / ell - geom.nu;
    Interval t2 = sqr(t);
    Interval pref = Interval::point(32 * (g - 1), p) * sqr(pi) * t2 /
                    Interval::point(g, p);
    Interval paren =
        (pi * t2 * sqr(defect)).scalb(1) / Interval::point(3, p) - one;
    out = pref * defect * paren;
  } else if (name == "peak_period") {
    long g = detail::reg_genus(params, "peak_period");
    Interval ds = detail::reg_param(params, "defect_sum", "peak_period");
    if (!ds.is_nonnegative())
      throw RangeError("peak_period: defect_sum must be nonnegative");
    Interval den = Interval::point(240, p) *
                       sqrt(Interval::point(g - 1, p), p) +
                   sqrt(ds, p);
    out = sqrt(pi, p) / den;
  } else if (name == "collar_pointwise") {
    Interval ell = detail::reg_param(params, "ell", "collar_pointwise");
    Interval z = detail::reg_param(params, "z_abs", "collar_pointwise");
    CollarGeometry geom = collar_from_length(ell, prec);
    detail::collar_membership(geom, z, "collar_pointwise");
    Interval e2nu = exp(geom.nu.scalb(1), p);
    Interval term1 = one / sqr(one - sqr(z) * e2nu);
    Interval decay = exp(-sqr(pi).scalb(2) / ell, p);
    Interval term2 = decay / sqr(sqr(z)) / sqr(one - sqr(geom.inner_radius / z));
    out = (e2nu.scalb(1) / detail::collar_norm(p)) * (term1 + term2);
  } else if (name == "collar_segment") {
    Interval ell = detail::reg_param(params, "ell", "collar_segment");
    Interval z0 = detail::reg_param(params, "z0_abs", "collar_segment");
    Interval z1 = detail::reg_param(params, "z1_abs", "collar_segment");
    Interval dz = detail::reg_param(params, "dz_abs", "collar_segment");
    if (certainly_gt(z0, z1))
      throw RangeError("collar_segment: requires |z0| <= |z1|");
    CollarGeometry geom = collar_from_length(ell, prec);
    detail::collar_membership(geom, z0, "collar_segment");
    detail::collar_membership(geom, z1, "collar_segment");
    Interval e2nu = exp(geom.nu.scalb(1), p);
    Interval term1 = sqr(dz) / sqr(one - sqr(z1) * e2nu);
    Interval decay = exp(-sqr(pi).scalb(2) / ell, p);
    Interval term2 = sqr(dz / (z0 * z1)) * decay /
                     sqr(one - sqr(geom.inner_radius / z0));
    out = e2nu / detail::collar_norm(p) * (term1 + term2);
  } else if (name == "collar_realpart") {
    Interval ell = detail::reg_param(params, "ell", "collar_realpart");
    Interval z0 = detail::reg_param(params, "z0_abs", "collar_realpart");
    Interval z1 = detail::reg_param(params, "z1_abs", "collar_realpart");
    Interval gre = detail::reg_param(params, "int_gamma_re", "collar_realpart");
    Interval gim = detail::reg_param(params, "int_gamma_im", "collar_realpart");
    if (certainly_gt(z0, z1))
      throw RangeError("collar_realpart: requires |z0| <= |z1|");
    CollarGeometry geom = collar_from_length(ell, prec);
    detail::collar_membership(geom, z0, "collar_realpart");
    detail::collar_membership(geom, z1, "collar_realpart");
    Interval e2nu = exp(geom.nu.scalb(1), p);
    Interval fac = (one - sqr(z1) * e2nu) *
                   (one - sqr(geom.inner_radius / z0));
    Interval arg = -log(fac, p) * sqr(one + z0 / z1) / detail::collar_norm(p);
    out = sqrt(arg, p) + gim * abs(log(z1 / z0, p)) / pi.scalb(1) +
          gre.scalb(-1);
  } else if (name == "supnorm_potential") {
    long g = detail::reg_genus(params, "supnorm_potential");
    Interval u1 = detail::reg_param(params, "upsilon1", "supnorm_potential");
    Interval u2 = detail::reg_param(params, "upsilon2", "supnorm_potential");
    Interval phi = detail::reg_param(params, "phi", "supnorm_potential");
    Interval xi1 = analytic_constant(AnalyticName::Xi1, g, std::nullopt, prec);
    Interval xi2 = analytic_constant(AnalyticName::Xi2, g, std::nullopt, prec);
    Interval inner = (Interval::point(1000, p) / xi1 +
                      Interval::point(2000, p) / xi2) *
                     u1 * u2 * phi / Interval::point(g - 1, p);
    Interval linear = Interval::point(1232, p) * pow_si(pi, 3) *
                      Interval::point(g - 1, p) *
                      Interval::point(2 * g - 3, p) * u1 * phi / xi2;
    out = sqrt(inner, p) + linear;
  } else if (name == "green_log_gap") {
    long g = detail::reg_genus(params, "green_log_gap");
    Interval phi = detail::reg_param(params, "phi", "green_log_gap");
    Interval xi2 = analytic_constant(AnalyticName::Xi2, g, std::nullopt, prec);
    Interval coef = Interval::point(2958032, p) * pow_si(pi, 4) +
                    Interval::point(3696, p) * pow_si(pi, 3);
    Interval shape = sqr(Interval::point(g - 1, p)) *
                     interval_from_q(detail::canonical_q(4 * g - 5, 2), p);
    out = coef * shape * phi / xi2;
  } else if (name == "metric_compare") {
    long g = detail::reg_genus(params, "metric_compare");
    Interval phi = detail::reg_param(params, "phi", "metric_compare");
    Interval xi2 = analytic_constant(AnalyticName::Xi2, g, std::nullopt, prec);
    Interval coef = (Interval::point(5916064, p) * pow_si(pi, 4) +
                     Interval::point(7392, p) * pow_si(pi, 3)) *
                    pow_si(Interval::point(g - 1, p), 3) / xi2;
    Interval cap = Interval::point(200000000000000L, p) *
                   detail::integer_power(g, 14, 3, p);
    if (!certainly_lt(coef, cap))
      throw CertificationFailed(
          "metric_compare: coefficient not certified below 2e14 g^(14/3)");
    out = coef * phi;
  } else if (name == "eigfn_thin") {
    Interval ell = detail::reg_param(params, "ell", "eigfn_thin");
    Interval eps = detail::reg_param(params, "eps", "eigfn_thin");
    if (!ell.is_positive())
      throw RangeError("eigfn_thin: ell must be positive");
    Interval cap = asinh(one, p).scalb(-2);
    if (certainly_gt(ell, cap))
      throw RangeError("eigfn_thin: ell certainly exceeds arcsinh(1)/4");
    if (!eps.is_positive() ||
        certainly_gt_q(eps, detail::canonical_q(1, 10)))
      throw RangeError("eigfn_thin: eps must lie in (0, 1/10]");
    out = exp(-eps.scalb(2) * log(ell, p), p).scalb(1) + one;
  } else if (name == "eigfn_thick") {
    Interval r = detail::reg_param(params, "r", "eigfn_thick");
    Interval eps = detail::reg_param(params, "eps", "eigfn_thick");
    Interval cr = cosh(r, p);
    Interval den = cr - one;
    if (!den.is_positive())
      throw DomainError("eigfn_thick: cosh(r) - 1 must be positive");
    Interval damp = one - eps * log((one + cr).scalb(-1), p);
    if (!damp.is_positive())
      throw DomainError("eigfn_thick: mollifier factor must stay positive");
    out = one / (pi.scalb(1) * den * sqr(damp));
  } else if (name == "inj_alt") {
    Interval ell = detail::reg_param(params, "ell", "inj_alt");
    Interval d = detail::reg_param(params, "d_boundary", "inj_alt");
    if (!ell.is_positive())
      throw RangeError("inj_alt: ell must be positive");
    if (certainly_lt(d, Interval::zero(p)))
      throw RangeError("inj_alt: d_boundary must be nonnegative");
    out = asinh(cosh(ell.scalb(-1), p) * cosh(d, p) - sinh(d, p), p);
  } else {
    throw UnknownName("part2_bound_registry: unknown entry " + name);
  }

  return out.rounded_to(prec.bits);
}

}  // namespace certnum
