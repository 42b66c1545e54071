#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "certnum/elementary.hpp"
#include "certnum/rational.hpp"

namespace certnum {

// Named analytic constants of the hyperbolic part. I1, I2, I3 are the closed
// forms of the three small-disc integrals; I4(g, k) is the thick-part minimum
// built from them; I5..I8, xi1..xi4, eps1, theta1, eps2 are the piecewise
// genus tables (exact rationals on the explicit rows, a formula on the final
// ">=" row). I6 is indexed by the collar count k rather than the genus; the
// same argument slot carries it.
enum class AnalyticName {
  I1,
  I2,
  I3,
  I4,
  I5,
  I6,
  I7,
  I8,
  Xi1,
  Xi2,
  Xi3,
  Xi4,
  Eps1,
  Theta1,
  Eps2,
};

inline std::optional<AnalyticName> parse_analytic_name(std::string_view s) {
  if (s == "I1") return AnalyticName::I1;
  if (s == "I2") return AnalyticName::I2;
  if (s == "I3") return AnalyticName::I3;
  if (s == "I4") return AnalyticName::I4;
  if (s == "I5") return AnalyticName::I5;
  if (s == "I6") return AnalyticName::I6;
  if (s == "I7") return AnalyticName::I7;
  if (s == "I8") return AnalyticName::I8;
  if (s == "xi1") return AnalyticName::Xi1;
  if (s == "xi2") return AnalyticName::Xi2;
  if (s == "xi3") return AnalyticName::Xi3;
  if (s == "xi4") return AnalyticName::Xi4;
  if (s == "eps1") return AnalyticName::Eps1;
  if (s == "theta1") return AnalyticName::Theta1;
  if (s == "eps2") return AnalyticName::Eps2;
  return std::nullopt;
}

inline std::string_view analytic_name_label(AnalyticName n) {
  switch (n) {
    case AnalyticName::I1: return "I1";
    case AnalyticName::I2: return "I2";
    case AnalyticName::I3: return "I3";
    case AnalyticName::I4: return "I4";
    case AnalyticName::I5: return "I5";
    case AnalyticName::I6: return "I6";
    case AnalyticName::I7: return "I7";
    case AnalyticName::I8: return "I8";
    case AnalyticName::Xi1: return "xi1";
    case AnalyticName::Xi2: return "xi2";
    case AnalyticName::Xi3: return "xi3";
    case AnalyticName::Xi4: return "xi4";
    case AnalyticName::Eps1: return "eps1";
    case AnalyticName::Theta1: return "theta1";
    case AnalyticName::Eps2: return "eps2";
  }
  throw UnknownName("analytic_name_label: unhandled enum value");
}

namespace detail {

inline mpq_class canonical_q(long num, long den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

inline mpq_class canonical_q(const mpz_class& num, const mpz_class& den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

// g^{num/den} for integer g >= 1, with the exact rational exponent.
inline Interval integer_power(long g, long num, long den, mpfr_prec_t p) {
  if (g == 1 || num == 0) return Interval::point(1, p);
  Interval lg = log(interval_from_z(mpz_class(g), p), p);
  return exp(interval_from_q(canonical_q(num, den), p) * lg, p);
}

}  // namespace detail

// I1 = (sqrt2 - 1)^4 / 4.
inline Interval disc_integral_1(mpfr_prec_t bits) {
  mpfr_prec_t p = bits + 16;
  Interval s2 = sqrt(Interval::point(2, p), p);
  Interval r = pow_si(s2 - Interval::point(1, p), 4).scalb(-2);
  return r.rounded_to(bits);
}

// I2 = (2 sqrt2 - 3 + log((sqrt2+1)/2)) / 2.
inline Interval disc_integral_2(mpfr_prec_t bits) {
  mpfr_prec_t p = bits + 16;
  Interval s2 = sqrt(Interval::point(2, p), p);
  Interval lg = log((s2 + Interval::point(1, p)).scalb(-1), p);
  Interval r = (s2.scalb(1) - Interval::point(3, p) + lg).scalb(-1);
  return r.rounded_to(bits);
}

// I3 = (sqrt2 - 1 - 2 log((sqrt2+1)/2)) / 4.
inline Interval disc_integral_3(mpfr_prec_t bits) {
  mpfr_prec_t p = bits + 16;
  Interval s2 = sqrt(Interval::point(2, p), p);
  Interval lg = log((s2 + Interval::point(1, p)).scalb(-1), p);
  Interval r = (s2 - Interval::point(1, p) - lg.scalb(1)).scalb(-2);
  return r.rounded_to(bits);
}

// I1 - (2/g) I2 + (1/g^2) I3, the combination every thick-part row uses.
inline Interval disc_integral_combo(long g, mpfr_prec_t bits) {
  mpfr_prec_t p = bits + 16;
  Interval i1 = disc_integral_1(p);
  Interval i2 = disc_integral_2(p);
  Interval i3 = disc_integral_3(p);
  mpz_class gz(g);
  Interval r = i1 - interval_from_q(detail::canonical_q(2, gz), p) * i2 +
               interval_from_q(detail::canonical_q(1, gz * gz), p) * i3;
  return r.rounded_to(bits);
}

// The index k(g) minimizing the thick-part bound: k = g - 2 on the explicit
// rows g = 6..12, and for g >= 13 the unique integer within distance 1/2 of
// g - (sqrt2+1) sqrt(g)/(2 sqrt3) + 1/6, i.e. the sole integer of
// [x - 1/3, x + 2/3) for x = g - (sqrt2+1) sqrt(g)/(2 sqrt3).
inline long thick_index_k(long g) {
  if (g < 6) throw RangeError("thick_index_k: defined for g >= 6");
  if (g <= 12) return g - 2;
  for (mpfr_prec_t p = 128; p <= 512; p *= 2) {
    Interval s2 = sqrt(Interval::point(2, p), p);
    Interval s3 = sqrt(Interval::point(3, p), p);
    Interval sg = sqrt(interval_from_z(mpz_class(g), p), p);
    Interval x = interval_from_z(mpz_class(g), p) -
                 (s2 + Interval::point(1, p)) * sg / s3.scalb(1);
    Interval c = x - interval_from_q(detail::canonical_q(1, 3), p);
    mpfr_t t;
    mpfr_init2(t, p);
    mpfr_ceil(t, c.lo());
    long k_lo = mpfr_get_si(t, MPFR_RNDN);
    mpfr_ceil(t, c.hi());
    long k_hi = mpfr_get_si(t, MPFR_RNDN);
    mpfr_clear(t);
    if (k_lo == k_hi) return k_lo;
  }
  throw PrecisionExhausted("thick_index_k: ceiling undetermined at 512 bits");
}

// p(x) = 1 - (sqrt2+1)/(2 sqrt(3x)) + 2/(3x), the normalized form of k(g)/g
// used by the g >= 13 rows of the I5 table.
inline Interval thick_chain_p(long g, mpfr_prec_t bits) {
  if (g < 1) throw RangeError("thick_chain_p: g must be positive");
  mpfr_prec_t p = bits + 16;
  Interval s2 = sqrt(Interval::point(2, p), p);
  Interval root = sqrt(Interval::point(3 * g, p), p);
  Interval r = Interval::point(1, p) -
               (s2 + Interval::point(1, p)) / root.scalb(1) +
               interval_from_q(detail::canonical_q(2, 3 * g), p);
  return r.rounded_to(bits);
}

namespace detail {

// Exact rational value of a table row when one exists. The formula rows with
// fractional powers of g (and the integrals I1..I4) have none.
inline std::optional<mpq_class> analytic_table_exact(AnalyticName name, long g) {
  switch (name) {
    case AnalyticName::I5: {
      static const long num[11] = {11, 1, 1, 3, 7, 7, 17, 4, 1, 1, 2};
      static const long den[11] = {495, 52, 56, 175, 400, 312, 625, 125, 27, 24, 47};
      if (g <= 12) return canonical_q(num[g - 2], den[g - 2]);
      return canonical_q(mpz_class(g), mpz_class(400));
    }
    case AnalyticName::I6: {
      if (g == 2) return canonical_q(1, 4);
      if (g == 3) return canonical_q(1, 8);
      if (g == 4) return canonical_q(3, 40);
      return std::nullopt;
    }
    case AnalyticName::I7: {
      if (g == 2) return canonical_q(1, 80);
      if (g == 3) return canonical_q(17, 2000);
      if (g == 4) return canonical_q(4, 625);
      return std::nullopt;
    }
    case AnalyticName::I8: {
      if (g == 2) return canonical_q(1, 100000);
      if (g == 3) return canonical_q(1, 120000);
      if (g == 4) return canonical_q(1, 140000);
      return std::nullopt;
    }
    case AnalyticName::Xi1: {
      if (g == 2) return canonical_q(1, 6400);
      if (g == 3) return canonical_q(1, 10900);
      if (g == 4) return canonical_q(1, 15500);
      return std::nullopt;
    }
    case AnalyticName::Xi2: {
      if (g == 2) return canonical_q(1, 512000);
      if (g == 3) return canonical_q(17, 21800000);
      if (g == 4) return canonical_q(1, 2421875);
      return std::nullopt;
    }
    case AnalyticName::Xi3: {
      if (g == 2) return canonical_q(1600, 1);
      if (g == 3) return canonical_q(2725, 1);
      if (g == 4) return canonical_q(3875, 1);
      return std::nullopt;
    }
    case AnalyticName::Xi4: {
      if (g == 2) return mpq_class(mpz_class("19558263230"));
      if (g == 3) return mpq_class(mpz_class("195942159193"));
      if (g == 4) return mpq_class(mpz_class("832634802404"));
      return std::nullopt;
    }
    case AnalyticName::Eps1: {
      if (g == 2) return canonical_q(47, 200);
      if (g == 3) return canonical_q(113, 400);
      if (g == 4) return canonical_q(42, 125);
      return canonical_q(11, 25);
    }
    case AnalyticName::Theta1: {
      if (g == 2) return canonical_q(785, 1);
      if (g == 3) return canonical_q(1155, 1);
      if (g == 4) return canonical_q(1476, 1);
      return std::nullopt;
    }
    case AnalyticName::Eps2: {
      if (g == 2) return canonical_q(1, 600000);
      if (g == 3) return canonical_q(1, 1000000);
      if (g == 4) return canonical_q(1, 1250000);
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace detail

// The exact rational behind analytic_constant when the requested row is
// rational; tests use it to compare tables without rounding.
inline std::optional<mpq_class> analytic_constant_exact(AnalyticName name, long g) {
  if (g < 2) throw RangeError("analytic_constant_exact: requires g >= 2");
  return detail::analytic_table_exact(name, g);
}

// Certified value of a named constant. For I4 the auxiliary integer is the
// thick-part index k in 1..g-1; for I6 the first argument is the subscript k
// of the table (the lemma's collar count), not a genus.
inline Interval analytic_constant(AnalyticName name, long g,
                                  std::optional<long> aux, const Precision& prec) {
  prec.validate();
  if (g < 2) throw RangeError("analytic_constant: requires g >= 2");
  mpfr_prec_t p = prec.bits + 16;

  switch (name) {
    case AnalyticName::I1:
      return disc_integral_1(prec.bits);
    case AnalyticName::I2:
      return disc_integral_2(prec.bits);
    case AnalyticName::I3:
      return disc_integral_3(prec.bits);
    case AnalyticName::I4: {
      if (g < 3) throw RangeError("analytic_constant: I4 requires g >= 3");
      if (!aux) throw MissingData("analytic_constant: I4 requires the index k");
      long k = *aux;
      if (k < 1 || k > g - 1)
        throw RangeError("analytic_constant: I4 index k must lie in 1..g-1");
      mpz_class kz(k), gz(g);
      mpq_class qa = detail::canonical_q(kz * (kz + 1) * (2 * kz + 1),
                                         mpz_class(3) * (gz - 1) * (gz - 1));
      Interval a = interval_from_q(qa, p) * disc_integral_1(p);
      Interval s2 = sqrt(Interval::point(2, p), p);
      Interval c2 = Interval::point(3, p) - s2.scalb(1);
      mpq_class qb = detail::canonical_q(
          mpz_class(8) * (gz - kz) * (gz - kz) * gz * gz * gz,
          (gz - 1) * (gz - 1) * (gz - 1));
      Interval b = interval_from_q(qb, p) * c2 * disc_integral_combo(g, p);
      return min(a, b).rounded_to(prec.bits);
    }
    case AnalyticName::I6: {
      if (auto q = detail::analytic_table_exact(name, g))
        return interval_from_q(*q, prec.bits);
      Interval r = interval_from_q(detail::canonical_q(7, 20), p) *
                   detail::integer_power(g, -4, 3, p);
      return r.rounded_to(prec.bits);
    }
    case AnalyticName::I5:
    case AnalyticName::Eps1:
      return interval_from_q(*detail::analytic_table_exact(name, g), prec.bits);
    case AnalyticName::I7:
    case AnalyticName::I8:
    case AnalyticName::Xi1:
    case AnalyticName::Xi2:
    case AnalyticName::Xi3:
    case AnalyticName::Xi4:
    case AnalyticName::Theta1:
    case AnalyticName::Eps2: {
      if (auto q = detail::analytic_table_exact(name, g))
        return interval_from_q(*q, prec.bits);
      Interval coef;
      Interval gp;
      switch (name) {
        case AnalyticName::I7:
          coef = interval_from_q(detail::canonical_q(1, 22), p);
          gp = detail::integer_power(g, -4, 3, p);
          break;
        case AnalyticName::I8:
          coef = interval_from_q(detail::canonical_q(1, 30000), p);
          gp = detail::integer_power(g, -4, 3, p);
          break;
        case AnalyticName::Xi1:
          coef = interval_from_q(detail::canonical_q(1, 15625), p);
          gp = detail::integer_power(g, -1, 3, p);
          break;
        case AnalyticName::Xi2:
          coef = interval_from_q(detail::canonical_q(1, 343750), p);
          gp = detail::integer_power(g, -5, 3, p);
          break;
        case AnalyticName::Xi3:
          coef = Interval::point(4000, p);
          gp = detail::integer_power(g, 1, 3, p);
          break;
        case AnalyticName::Xi4:
          coef = interval_from_z(mpz_class("13131158175"), p);
          gp = detail::integer_power(g, 11, 3, p);
          break;
        case AnalyticName::Theta1:
          coef = interval_from_q(detail::canonical_q(429, 2), p);
          gp = detail::integer_power(g, 4, 3, p);
          break;
        case AnalyticName::Eps2:
          coef = interval_from_q(detail::canonical_q(1, 250000), p);
          gp = detail::integer_power(g, -4, 3, p);
          break;
        default:
          throw UnknownName("analytic_constant: unhandled formula row");
      }
      return (coef * gp).rounded_to(prec.bits);
    }
  }
  throw UnknownName("analytic_constant: unhandled enum value");
}

}  // namespace certnum
