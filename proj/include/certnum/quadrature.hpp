#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "certnum/elementary.hpp"
#include "certnum/interval.hpp"
#include "certnum/rational.hpp"

namespace certnum {

// Thrown by series builders when a panel admits no Taylor expansion (for
// example a denominator whose enclosure touches zero); the integrator falls
// back to a zero-order enclosure on that panel.
struct SeriesUnavailable {};

// Truncated Taylor expansion with interval coefficients. Coefficient k of any
// composite built from these operations encloses f^(k)(xi)/k! for every xi in
// the seed's constant term, which is what the panel remainder needs.
class Series {
 public:
  Series(int order, mpfr_prec_t prec)
      : coef_(static_cast<std::size_t>(order) + 1, Interval::zero(prec)) {}

  static Series variable(const Interval& x0, int order) {
    Series s(order, x0.prec());
    s.coef_[0] = x0;
    if (order >= 1) s.coef_[1] = Interval::point(1, x0.prec());
    return s;
  }

  static Series constant(const Interval& c, int order) {
    Series s(order, c.prec());
    s.coef_[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(coef_.size()) - 1; }
  mpfr_prec_t prec() const { return coef_[0].prec(); }

  const Interval& operator[](int k) const { return coef_[static_cast<std::size_t>(k)]; }
  Interval& operator[](int k) { return coef_[static_cast<std::size_t>(k)]; }

 private:
  std::vector<Interval> coef_;
};

inline Series operator+(const Series& a, const Series& b) {
  Series r(a.order(), std::max(a.prec(), b.prec()));
  for (int k = 0; k <= a.order(); ++k) r[k] = a[k] + b[k];
  return r;
}

inline Series operator-(const Series& a, const Series& b) {
  Series r(a.order(), std::max(a.prec(), b.prec()));
  for (int k = 0; k <= a.order(); ++k) r[k] = a[k] - b[k];
  return r;
}

inline Series operator-(const Series& a) {
  Series r(a.order(), a.prec());
  for (int k = 0; k <= a.order(); ++k) r[k] = -a[k];
  return r;
}

inline Series operator+(const Series& a, const Interval& c) {
  Series r = a;
  r[0] = r[0] + c;
  return r;
}

inline Series operator-(const Series& a, const Interval& c) {
  Series r = a;
  r[0] = r[0] - c;
  return r;
}

inline Series operator*(const Series& a, const Interval& c) {
  Series r(a.order(), std::max(a.prec(), c.prec()));
  for (int k = 0; k <= a.order(); ++k) r[k] = a[k] * c;
  return r;
}

inline Series operator*(const Series& a, const Series& b) {
  Series r(a.order(), std::max(a.prec(), b.prec()));
  for (int k = 0; k <= a.order(); ++k) {
    Interval acc = Interval::zero(r.prec());
    for (int i = 0; i <= k; ++i) acc = acc + a[i] * b[k - i];
    r[k] = acc;
  }
  return r;
}

inline Series operator/(const Series& a, const Series& b) {
  if (b[0].contains_zero()) throw SeriesUnavailable{};
  Series q(a.order(), std::max(a.prec(), b.prec()));
  for (int k = 0; k <= a.order(); ++k) {
    Interval acc = a[k];
    for (int i = 0; i < k; ++i) acc = acc - q[i] * b[k - i];
    q[k] = acc / b[0];
  }
  return q;
}

inline Series operator/(const Series& a, const Interval& c) {
  Series r(a.order(), std::max(a.prec(), c.prec()));
  for (int k = 0; k <= a.order(); ++k) r[k] = a[k] / c;
  return r;
}

inline Series exp(const Series& a) {
  Series e(a.order(), a.prec());
  e[0] = exp(a[0]);
  for (int k = 1; k <= a.order(); ++k) {
    Interval acc = Interval::zero(a.prec());
    for (int j = 1; j <= k; ++j) acc = acc + a[j] * e[k - j] * Interval::point(j, a.prec());
    e[k] = acc / Interval::point(k, a.prec());
  }
  return e;
}

inline Series log(const Series& a) {
  if (!a[0].is_positive()) throw SeriesUnavailable{};
  Series l(a.order(), a.prec());
  l[0] = log(a[0]);
  for (int k = 1; k <= a.order(); ++k) {
    Interval acc = a[k] * Interval::point(k, a.prec());
    for (int j = 1; j < k; ++j) acc = acc - l[j] * a[k - j] * Interval::point(j, a.prec());
    l[k] = acc / (a[0] * Interval::point(k, a.prec()));
  }
  return l;
}

inline Series sqrt(const Series& a) {
  if (!a[0].is_positive()) throw SeriesUnavailable{};
  Series s(a.order(), a.prec());
  s[0] = sqrt(a[0]);
  Interval two_s0 = s[0].scalb(1);
  for (int k = 1; k <= a.order(); ++k) {
    Interval acc = a[k];
    for (int i = 1; i < k; ++i) acc = acc - s[i] * s[k - i];
    s[k] = acc / two_s0;
  }
  return s;
}

namespace detail {

inline std::pair<Series, Series> sin_cos_pair(const Series& a, bool hyperbolic) {
  Series s(a.order(), a.prec());
  Series c(a.order(), a.prec());
  if (hyperbolic) {
    s[0] = sinh(a[0]);
    c[0] = cosh(a[0]);
  } else {
    s[0] = sin(a[0]);
    c[0] = cos(a[0]);
  }
  for (int k = 1; k <= a.order(); ++k) {
    Interval accs = Interval::zero(a.prec());
    Interval accc = Interval::zero(a.prec());
    for (int j = 1; j <= k; ++j) {
      Interval jw = a[j] * Interval::point(j, a.prec());
      accs = accs + jw * c[k - j];
      accc = accc + jw * s[k - j];
    }
    Interval kk = Interval::point(k, a.prec());
    s[k] = accs / kk;
    c[k] = hyperbolic ? accc / kk : -(accc / kk);
  }
  return {std::move(s), std::move(c)};
}

}  // namespace detail

inline Series sin(const Series& a) { return detail::sin_cos_pair(a, false).first; }
inline Series cos(const Series& a) { return detail::sin_cos_pair(a, false).second; }
inline Series sinh(const Series& a) { return detail::sin_cos_pair(a, true).first; }
inline Series cosh(const Series& a) { return detail::sin_cos_pair(a, true).second; }

inline Series atan(const Series& a) {
  Series d = Series::constant(Interval::point(1, a.prec()), a.order()) + a * a;
  Series t(a.order(), a.prec());
  t[0] = atan(a[0]);
  for (int k = 1; k <= a.order(); ++k) {
    Interval acc = a[k] * Interval::point(k, a.prec());
    for (int j = 1; j < k; ++j) acc = acc - t[j] * d[k - j] * Interval::point(j, a.prec());
    t[k] = acc / (d[0] * Interval::point(k, a.prec()));
  }
  return t;
}

inline Series pow_si(const Series& a, long n) {
  if (n == 0) return Series::constant(Interval::point(1, a.prec()), a.order());
  if (n < 0) {
    Series one = Series::constant(Interval::point(1, a.prec()), a.order());
    return one / pow_si(a, -n);
  }
  Series acc = a;
  Series result = Series::constant(Interval::point(1, a.prec()), a.order());
  long m = n;
  while (m > 0) {
    if (m & 1) result = result * acc;
    m >>= 1;
    if (m > 0) acc = acc * acc;
  }
  return result;
}

// sinh(s)/s on s >= 0, extended by 1 at s = 0; increasing in s.
inline Interval sinhc(const Interval& s) {
  if (mpfr_sgn(s.lo()) < 0) throw DomainError("sinhc: argument must be nonnegative");
  mpfr_prec_t p = s.prec();
  Interval r(p);
  if (mpfr_zero_p(s.hi())) return Interval::point(1, p);
  {
    Interval hi_pt = s.upper();
    Interval v = sinh(hi_pt) / hi_pt;
    mpfr_set(r.hi_mut(), v.hi(), MPFR_RNDU);
  }
  if (mpfr_zero_p(s.lo())) {
    mpfr_set_si(r.lo_mut(), 1, MPFR_RNDD);
  } else {
    Interval lo_pt = s.lower();
    Interval v = sinh(lo_pt) / lo_pt;
    mpfr_set(r.lo_mut(), v.lo(), MPFR_RNDD);
  }
  r.check("sinhc");
  return r;
}

// Taylor expansion of G(x) = sinh(x^2/2)/(x^2/2) = sum_k x^{4k} / (4^k (2k+1)!)
// about the constant term of the variable seed x (a point or a whole panel in
// [0,4]). Each Taylor coefficient is its own convergent positive series; it is
// summed until the terms are negligible and the tail, bounded by a geometric
// comparison once the term ratio falls below 1/2, is added as an interval.
inline Series sinhc_quartic(const Series& x, mpfr_prec_t target_bits) {
  const Interval& x0 = x[0];
  if (mpfr_sgn(x0.lo()) < 0 || mpfr_cmp_si(x0.hi(), 4) > 0) throw SeriesUnavailable{};
  for (int k = 2; k <= x.order(); ++k) {
    if (!mpfr_zero_p(x[k].lo()) || !mpfr_zero_p(x[k].hi())) throw SeriesUnavailable{};
  }
  bool is_variable = x.order() >= 1 && x[1].is_point() && mpfr_cmp_si(x[1].lo(), 1) == 0;
  if (x.order() >= 1 && !is_variable &&
      !(mpfr_zero_p(x[1].lo()) && mpfr_zero_p(x[1].hi())))
    throw SeriesUnavailable{};

  const int N = x.order();
  const mpfr_prec_t p = x.prec();
  Series g(N, p);
  // k_safe: from this index on, consecutive terms decay at least by 1/2
  // (ratio <= 16 * x0^4 / (4 (2k+2)(2k+3)) <= 1/2 for k >= 2*x0^2 + m/2).
  double x0d = mpfr_get_d(x0.hi(), MPFR_RNDU);
  for (int m = 0; m <= N; ++m) {
    int k_safe = static_cast<int>(2.0 * x0d * x0d) + m / 2 + 3;
    Interval acc = Interval::zero(p);
    Interval last_term = Interval::zero(p);
    int k = (m + 3) / 4;
    for (;; ++k) {
      // term = C(4k, m) * x0^{4k-m} / (4^k (2k+1)!)
      mpq_class c{binomial(4ul * static_cast<unsigned long>(k), static_cast<unsigned long>(m))};
      mpz_class four_k;
      mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
      c /= mpq_class(four_k) * mpq_class(factorial(2ul * static_cast<unsigned long>(k) + 1));
      Interval term = interval_from_q(c, p) * pow_si(x0, 4 * k - m);
      acc = acc + term;
      last_term = term;
      if (k >= k_safe &&
          (mpfr_zero_p(term.hi()) || mpfr_get_exp(term.hi()) < -(target_bits + 48)))
        break;
      if (k > k_safe + static_cast<int>(target_bits) + 64) throw SeriesUnavailable{};
    }
    // geometric tail: everything past the last term is at most its size again
    Interval tail(p);
    mpfr_set_zero(tail.lo_mut(), 1);
    mpfr_set(tail.hi_mut(), last_term.hi(), MPFR_RNDU);
    g[m] = acc + tail;
  }
  if (!is_variable) {
    for (int m = 1; m <= N; ++m) g[m] = Interval::zero(p);
  }
  return g;
}

// Integrand with two evaluation modes: a plain interval enclosure and a
// Taylor-series builder used for the high-order panel rule. The series
// callback may be empty or throw SeriesUnavailable.
struct Integrand {
  std::function<Interval(const Interval&)> value;
  std::function<Series(const Series&)> series;
};

struct TailMajorant {
  Interval c;
  Interval lambda;
};

namespace detail {

inline int quad_order(mpfr_prec_t bits) {
  long n = bits / 5;
  if (n < 8) n = 8;
  if (n > 48) n = 48;
  if (n % 2) ++n;
  return static_cast<int>(n);
}

// Panel rule: f = sum_{j<N} a_j(c) (x-c)^j + f^(N)(xi)/N! (x-c)^N with xi in
// the panel, integrated exactly against the monomial weights. The expansion
// point need not be the exact center; the weights (v^{j+1}-u^{j+1})/(j+1) for
// u = lo-c, v = hi-c account for any offset, and the remainder weight is
// nonnegative because N is even.
inline std::optional<Interval> taylor_panel(const Integrand& f, const Interval& panel,
                                            int N, mpfr_prec_t p) {
  if (!f.series) return std::nullopt;
  try {
    Interval c = panel.mid();
    Interval u = panel.lower() - c;
    Interval v = panel.upper() - c;
    Series sc = f.series(Series::variable(c, N));
    Series sp = f.series(Series::variable(panel, N));
    Interval upow = u;
    Interval vpow = v;
    Interval acc = Interval::zero(p);
    for (int j = 0; j < N; ++j) {
      acc = acc + sc[j] * (vpow - upow) / Interval::point(j + 1, p);
      upow = upow * u;
      vpow = vpow * v;
    }
    acc = acc + sp[N] * (vpow - upow) / Interval::point(N + 1, p);
    acc.check("taylor_panel");
    return acc;
  } catch (const SeriesUnavailable&) {
    return std::nullopt;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace detail

// Certified enclosure of the integral of f over [a, b]. Interval endpoints are
// handled by integrating over the outer hull and subtracting slab enclosures.
// Panels are accepted when their enclosure width fits a share of the total
// budget 2^(-bits/2) proportional to panel length.
inline Interval quad_certified(const Integrand& f, const Interval& a, const Interval& b,
                               const Precision& prec) {
  prec.validate();
  const mpfr_prec_t p = prec.bits + 16;
  if (mpfr_cmp(a.hi(), b.lo()) > 0)
    throw DomainError("quad_certified: endpoints out of order");

  Interval alpha = a.lower();
  Interval beta = b.upper();
  Interval length = beta - alpha;
  if (mpfr_zero_p(length.hi())) return Interval::zero(prec.bits);

  // per-length width budget
  Interval eps = Interval::point(1, p).scalb(-static_cast<long>(prec.bits / 2));
  Interval rate = eps / length.upper();

  const int N = detail::quad_order(prec.bits);
  struct PanelJob {
    Interval lo, hi;
    int depth;
  };
  std::vector<PanelJob> stack;
  stack.push_back({alpha, beta, 0});
  Interval total = Interval::zero(p);
  long panels = 0;

  while (!stack.empty()) {
    PanelJob job = std::move(stack.back());
    stack.pop_back();
    if (++panels > 2000000)
      throw PrecisionExhausted("quad_certified: panel limit exceeded");
    Interval panel = Interval::hull(job.lo, job.hi);
    std::optional<Interval> enc = detail::taylor_panel(f, panel, N, p);
    if (!enc) {
      Interval len = job.hi - job.lo;
      enc = f.value(panel) * len;
    }
    Interval w = enc->upper() - enc->lower();
    Interval allowance = (job.hi - job.lo) * rate;
    if (mpfr_zero_p(w.hi()) || mpfr_cmp(w.hi(), allowance.lo()) <= 0) {
      total = total + *enc;
      continue;
    }
    if (job.depth >= prec.max_subdivisions)
      throw PrecisionExhausted("quad_certified: subdivision limit reached");
    Interval m = panel.mid();
    stack.push_back({m, job.hi, job.depth + 1});
    stack.push_back({job.lo, m, job.depth + 1});
  }

  // slabs for interval-valued endpoints
  if (!a.is_point()) {
    Interval wa = a.upper() - a.lower();
    Interval span(p);
    mpfr_set_zero(span.lo_mut(), 1);
    mpfr_set(span.hi_mut(), wa.hi(), MPFR_RNDU);
    total = total - f.value(a) * span;
  }
  if (!b.is_point()) {
    Interval wb = b.upper() - b.lower();
    Interval span(p);
    mpfr_set_zero(span.lo_mut(), 1);
    mpfr_set(span.hi_mut(), wb.hi(), MPFR_RNDU);
    total = total - f.value(b) * span;
  }

  Interval out(prec.bits);
  mpfr_set(out.lo_mut(), total.lo(), MPFR_RNDD);
  mpfr_set(out.hi_mut(), total.hi(), MPFR_RNDU);
  out.check("quad_certified");
  return out;
}

// Enclosure of the tail integral of |f| over [T, infinity), given a Gaussian
// majorant |f(x)| <= c exp(-lambda x^2) there. The domination is probed on a
// grid of panels covering several decades of decay; panels where the claim is
// not visibly true make the call fail rather than silently trusting it.
// Bound: tail <= c exp(-lambda T^2) / (2 lambda T).
inline Interval quad_tail(const std::function<Interval(const Interval&)>& f,
                          const Interval& T, const TailMajorant& m,
                          const Precision& prec) {
  prec.validate();
  const mpfr_prec_t p = prec.bits + 16;
  if (!T.is_positive()) throw DomainError("quad_tail: T must be positive");
  if (!m.lambda.is_positive()) throw DomainError("quad_tail: lambda must be positive");
  if (mpfr_sgn(m.c.lo()) < 0) throw DomainError("quad_tail: c must be nonnegative");

  // Probe the claim on [T, sqrt(T^2 + 40/lambda)], adaptively: a panel passes
  // when sup f <= inf of the majorant there; failing panels are bisected in
  // the x^2 coordinate until they pass or the work cap is hit. A majorant
  // with no pointwise slack is reported as unverifiable, by design.
  Interval t2 = sqr(T.lower());
  Interval span = Interval::point(40, p) / m.lambda.lower();
  struct Probe {
    Interval lo2, hi2;
    int depth;
  };
  std::vector<Probe> probes;
  probes.push_back({t2, t2 + span, 0});
  long work = 0;
  while (!probes.empty()) {
    Probe pr = std::move(probes.back());
    probes.pop_back();
    if (++work > 20000)
      throw DecayUnverifiable("quad_tail: domination probe did not converge");
    Interval q0 = sqrt(pr.lo2);
    Interval q1 = sqrt(pr.hi2);
    Interval panel = Interval::hull(q0, q1);
    Interval fv = f(panel);
    Interval maj = m.c * exp(-(m.lambda * pr.hi2.upper()), p);
    if (certainly_le(fv, maj) || mpfr_sgn(fv.hi()) <= 0) continue;
    if (pr.depth >= 20)
      throw DecayUnverifiable(
          "quad_tail: majorant does not visibly dominate on probe panel " +
          panel.to_string(8));
    Interval mid = Interval::hull(pr.lo2, pr.hi2).mid();
    probes.push_back({mid, pr.hi2, pr.depth + 1});
    probes.push_back({pr.lo2, mid, pr.depth + 1});
  }

  Interval bound = m.c * exp(-(m.lambda * t2), p) /
                   (m.lambda.scalb(1) * T.lower());
  Interval out(prec.bits);
  mpfr_set_zero(out.lo_mut(), 1);
  mpfr_set(out.hi_mut(), bound.hi(), MPFR_RNDU);
  out.check("quad_tail");
  return out;
}

}  // namespace certnum
