#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "certnum/cap_volume.hpp"
#include "certnum/elementary.hpp"
#include "certnum/gegenbauer.hpp"
#include "certnum/interval.hpp"
#include "certnum/rational.hpp"

namespace certnum {

enum class PackingMethod { CapVolume, Rankin, KL, Best };

// A(n, theta): maximal number of nonzero vectors in R^n with pairwise angle
// at least theta.
struct PackingQuery {
  long n;
  Interval theta;
  PackingMethod method = PackingMethod::Best;

  void validate() const {
    if (n < 1) throw DomainError("PackingQuery: n must be at least 1");
    if (!theta.is_positive())
      throw DomainError("PackingQuery: theta must be strictly positive");
    if (certainly_gt(theta, Interval::pi(theta.prec() + 8)))
      throw DomainError("PackingQuery: theta must lie within (0, pi]");
  }
};

// Volume comparison: caps of radius theta/2 around packed points are
// disjoint, so A(n, theta) <= vol(S^{n-1}) / vol(cap(theta/2)). The integer
// bound to report is floor of the upper endpoint.
inline Interval cap_volume_bound(const PackingQuery& q, const Precision& prec) {
  q.validate();
  if (q.n < 2) throw DomainError("cap_volume_bound: n must be at least 2");
  mpfr_prec_t p = prec.bits + 16;
  Interval half = q.theta / Interval::point(2, p);
  CapVolume vols = cap_volume(q.n, half, Precision{p, prec.max_subdivisions});
  Interval ratio = vols.sphere / vols.cap;
  Interval out(prec.bits);
  mpfr_set(out.lo_mut(), ratio.lo(), MPFR_RNDD);
  mpfr_set(out.hi_mut(), ratio.hi(), MPFR_RNDU);
  out.check("cap_volume_bound");
  return out;
}

namespace detail {

// (1 + sqrt(cos t)) n^{3/2} / (sqrt(cos t) (1 - cos t)^{(n-1)/2}) on an
// enclosure of cos t that must stay inside (0, 1).
inline Interval rankin_formula(long n, const Interval& cost, mpfr_prec_t p) {
  if (!cost.is_positive())
    throw DomainError("rankin_bound: formula branch needs cos(theta) > 0");
  Interval one = Interval::point(1, p);
  Interval base = one - cost;
  if (!base.is_positive())
    throw DomainError("rankin_bound: formula branch needs cos(theta) < 1");
  Interval sc = sqrt(cost, p);
  Interval n32 = sqrt(pow_si(Interval::point(n, p), 3), p);
  Interval expo = Interval::point(n - 1, p) / Interval::point(2, p);
  Interval denom_pow = exp(expo * log(base, p), p);
  return (one + sc) * n32 / (sc * denom_pow);
}

}  // namespace detail

// Rankin's bound. The closed formula is applied for theta.hi <= pi/2, the
// simplex value n+1 for theta.lo > pi/2 (strictly, so the pi/2 tie goes to
// the formula side), and an enclosure straddling pi/2 returns the max of the
// formula at theta.lo with n+1.
inline Interval rankin_bound(const PackingQuery& q, const Precision& prec) {
  q.validate();
  if (q.n == 1) return Interval::point(2, prec.bits);
  mpfr_prec_t p = prec.bits + 16;
  Interval half_pi = Interval::pi(p) / Interval::point(2, p);
  if (certainly_gt(q.theta, half_pi)) return Interval::point(q.n + 1, prec.bits);

  Interval value(p);
  if (certainly_le(q.theta, half_pi)) {
    value = detail::rankin_formula(q.n, cos(q.theta, p), p);
  } else {
    Interval at_lo = detail::rankin_formula(q.n, cos(q.theta.lower(), p), p);
    value = max(at_lo, Interval::point(q.n + 1, p));
  }
  Interval out(prec.bits);
  mpfr_set(out.lo_mut(), value.lo(), MPFR_RNDD);
  mpfr_set(out.hi_mut(), value.hi(), MPFR_RNDU);
  out.check("rankin_bound");
  return out;
}

// Kabatjanskii-Levenshtein linear-programming bound: once
// cos(theta) <= x_{(n,m)} is certified,
// A(n, theta) <= 4 binom(m+n-2, n-2) / (1 - x_{(n,m+1)}).
inline Interval kl_bound(const PackingQuery& q, long m, const Precision& prec) {
  q.validate();
  if (q.n < 2) throw DomainError("kl_bound: n must be at least 2");
  if (m < 1) throw DomainError("kl_bound: m must be at least 1");
  mpfr_prec_t p = prec.bits + 16;
  Precision inner{p, prec.max_subdivisions};

  Interval root_m = gegenbauer_largest_root(q.n, m, inner);
  Interval ct = cos(q.theta, p);
  if (!certainly_le(ct, root_m))
    throw HypothesisUnverified(
        "kl_bound: cos(theta) <= largest Gegenbauer root not certified");

  Interval root_next = gegenbauer_largest_root(q.n, m + 1, inner);
  Interval denom = Interval::point(1, p) - root_next;
  if (!denom.is_positive())
    throw CertificationFailed("kl_bound: next root enclosure reaches 1");
  Interval value =
      Interval::point(4, p) * interval_from_z(binomial(m + q.n - 2, q.n - 2), p) / denom;
  Interval out(prec.bits);
  mpfr_set(out.lo_mut(), value.lo(), MPFR_RNDD);
  mpfr_set(out.hi_mut(), value.hi(), MPFR_RNDU);
  out.check("kl_bound");
  return out;
}

// Internals of the refined bound at theta = arccos sqrt(1.01/g),
// beta = arccos sqrt(10.7/g), m = ceil((1-sin beta)/(2 sin beta) * n).
struct RefinedABound {
  long m = 0;
  Interval binomial_form;
  Interval closed_form;
  Interval value;
  mpq_class sturm_ratio;     // (n-1)(n-5) / ((2m+n+1)(2m+n-1))
  bool ratio_certified = false;    // sturm_ratio >= 0.89, exact rationals
  bool next_root_below_third = false;  // x_{(n,m+1)} < 1/3 via 9p < q
  bool hypothesis_certified = false;   // cos(theta) <= x_{(n,m)}
};

inline RefinedABound refined_A_bound_report(long n, long g, const Precision& prec) {
  if (g < 142) throw RangeError("refined_A_bound: g must be at least 142");
  if (n < 2 * g) throw RangeError("refined_A_bound: n must be at least 2g");
  prec.validate();

  RefinedABound rep;
  mpfr_prec_t p = prec.bits + 32;
  for (int attempt = 0; attempt < 4; ++attempt, p *= 2) {
    Interval one = Interval::point(1, p);
    Interval cos2_beta = interval_from_q(mpq_class(107, 10) / g, p);
    Interval sin_beta = sqrt(one - cos2_beta, p);
    Interval s = (one - sin_beta) / (Interval::point(2, p) * sin_beta);
    Interval mI = s * Interval::point(n, p);
    mpz_class m_exact;
    try {
      m_exact = ceil_exact(mI);
    } catch (const CertificationFailed&) {
      continue;
    }
    rep.m = static_cast<long>(m_exact.get_si());

    rep.binomial_form =
        Interval::point(6, p) * interval_from_z(binomial(rep.m + n - 2, n - 2), p);

    Interval ratio = (one + sin_beta) / (one - sin_beta);
    Interval expo = s * Interval::point(n, p) + one;
    Interval first = exp(expo * log(ratio, p), p);
    Interval second = pow_si((one + sin_beta) / (Interval::point(2, p) * sin_beta),
                             n - 2);
    rep.closed_form = Interval::point(6, p) * exp(one, p) * first * second;

    rep.value = min(rep.binomial_form, rep.closed_form);

    rep.sturm_ratio = mpq_class(mpz_class(n - 1) * mpz_class(n - 5),
                                mpz_class(2 * rep.m + n + 1) * mpz_class(2 * rep.m + n - 1));
    rep.sturm_ratio.canonicalize();
    rep.ratio_certified = rep.sturm_ratio >= mpq_class(89, 100);

    GegenbauerIndex next(n, rep.m + 1);
    rep.next_root_below_third = 9 * next.p() < next.q();

    Interval cos_theta = sqrt(interval_from_q(mpq_class(101, 100) / g, p), p);
    Interval root_m = gegenbauer_largest_root(n, rep.m, Precision{p, prec.max_subdivisions});
    rep.hypothesis_certified = certainly_le(cos_theta, root_m);

    Interval out(prec.bits);
    mpfr_set(out.lo_mut(), rep.value.lo(), MPFR_RNDD);
    mpfr_set(out.hi_mut(), rep.value.hi(), MPFR_RNDU);
    out.check("refined_A_bound");
    rep.value = out;
    if (!rep.next_root_below_third || !rep.ratio_certified || !rep.hypothesis_certified)
      throw CertificationFailed("refined_A_bound: an internal step failed to certify");
    return rep;
  }
  throw CertificationFailed("refined_A_bound: ceiling for m stayed ambiguous");
}

inline Interval refined_A_bound(long n, long g, const Precision& prec) {
  return refined_A_bound_report(n, g, prec).value;
}

// B = (1+1/s)^s (s+1) with s = (1-sin beta)/(2 sin beta), plus the two
// certified comparisons the surrounding argument needs.
struct KlBaseBound {
  Interval B;
  Interval s;
  bool log_bound_certified = false;    // log B < 2.84 log g / g
  bool ratio_bound_certified = false;  // B < (1+3 log g/g)/(1+0.01 log g/g)
};

inline KlBaseBound kl_base_bound_report(long g, const Precision& prec) {
  if (g < 142) throw RangeError("kl_base_bound: g must be at least 142");
  prec.validate();
  mpfr_prec_t p = prec.bits + 16;
  Interval one = Interval::point(1, p);
  Interval cos2_beta = interval_from_q(mpq_class(107, 10) / g, p);
  Interval sin_beta = sqrt(one - cos2_beta, p);
  Interval s = (one - sin_beta) / (Interval::point(2, p) * sin_beta);

  Interval B = exp(s * log(one + one / s, p), p) * (s + one);
  Interval logg = log(Interval::point(g, p), p);
  Interval gI = Interval::point(g, p);

  KlBaseBound rep;
  rep.log_bound_certified =
      certainly_lt(log(B, p), interval_from_q(mpq_class(284, 100), p) * logg / gI);
  Interval rhs = (one + Interval::point(3, p) * logg / gI) /
                 (one + interval_from_q(mpq_class(1, 100), p) * logg / gI);
  rep.ratio_bound_certified = certainly_lt(B, rhs);

  Interval outB(prec.bits), outs(prec.bits);
  mpfr_set(outB.lo_mut(), B.lo(), MPFR_RNDD);
  mpfr_set(outB.hi_mut(), B.hi(), MPFR_RNDU);
  mpfr_set(outs.lo_mut(), s.lo(), MPFR_RNDD);
  mpfr_set(outs.hi_mut(), s.hi(), MPFR_RNDU);
  rep.B = outB;
  rep.s = outs;
  return rep;
}

inline Interval kl_base_bound(long g, const Precision& prec) {
  return kl_base_bound_report(g, prec).B;
}

// Gap of the calculus inequality n^t <= (t/(e log a))^t a^n: returns
// RHS - LHS, whose true value is nonnegative on the stated domain.
inline Interval calc_bound(const Interval& n, const Interval& t, const Interval& a,
                           const Precision& prec) {
  prec.validate();
  if (!n.is_positive()) throw DomainError("calc_bound: n must be positive");
  if (!t.is_positive()) throw DomainError("calc_bound: t must be positive");
  mpfr_prec_t p = prec.bits + 16;
  Interval one = Interval::point(1, p);
  if (!certainly_gt(a, one)) throw DomainError("calc_bound: a must exceed 1");
  Interval loga = log(a, p);
  Interval base = t / (exp(one, p) * loga);
  Interval rhs = exp(t * log(base, p), p) * exp(n * loga, p);
  Interval lhs = exp(t * log(n, p), p);
  Interval gap = rhs - lhs;
  Interval out(prec.bits);
  mpfr_set(out.lo_mut(), gap.lo(), MPFR_RNDD);
  mpfr_set(out.hi_mut(), gap.hi(), MPFR_RNDU);
  out.check("calc_bound");
  return out;
}

struct BestBound {
  Interval value;
  std::string method;
};

// Interval-min across the applicable methods, recording the winner. The LP
// bound joins the race with the smallest degree whose hypothesis certifies.
inline BestBound best_bound(const PackingQuery& q, const Precision& prec) {
  q.validate();
  BestBound best{rankin_bound(q, prec), "rankin"};
  if (q.n >= 2) {
    try {
      Interval cap = cap_volume_bound(q, prec);
      if (mpfr_cmp(cap.hi(), best.value.hi()) < 0) best = {cap, "cap_volume"};
    } catch (const DomainError&) {
    }
    for (long m = 1; m <= 8; ++m) {
      try {
        Interval kl = kl_bound(q, m, prec);
        if (mpfr_cmp(kl.hi(), best.value.hi()) < 0) best = {kl, "kl"};
      } catch (const HypothesisUnverified&) {
      } catch (const CertificationFailed&) {
      }
    }
  }
  return best;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Counter-based stream: the j-th variate of a trial needs no shared state.
inline double uniform01(std::uint64_t base, std::uint64_t j) {
  std::uint64_t bits = splitmix64(base + 0x632be59bd9b4e019ull * (j + 1));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline std::vector<double> gaussian_vector(std::uint64_t base, long n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (long i = 0; i < n; i += 2) {
    double u1 = uniform01(base, static_cast<std::uint64_t>(i));
    double u2 = uniform01(base, static_cast<std::uint64_t>(i) + 1);
    if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
    double r = std::sqrt(-2.0 * std::log(u1));
    v[static_cast<std::size_t>(i)] = r * std::cos(2.0 * M_PI * u2);
    if (i + 1 < n) v[static_cast<std::size_t>(i) + 1] = r * std::sin(2.0 * M_PI * u2);
  }
  return v;
}

// Interval re-check that the kept configuration is a theta-packing. Doubles
// convert to point intervals exactly, so passing here certifies the count.
// Returns the index of the first vector violating a pair, or SIZE_MAX.
inline std::size_t packing_offender(const std::vector<std::vector<double>>& pts,
                                    const Interval& cos_cap, mpfr_prec_t p) {
  std::size_t k = pts.size();
  auto as_interval = [p](double c) {
    Interval ci(p);
    mpfr_set_d(ci.lo_mut(), c, MPFR_RNDD);
    mpfr_set_d(ci.hi_mut(), c, MPFR_RNDU);
    return ci;
  };
  std::vector<Interval> norms;
  norms.reserve(k);
  for (const auto& v : pts) {
    Interval sum = Interval::zero(p);
    for (double c : v) sum = sum + sqr(as_interval(c));
    norms.push_back(sqrt(sum, p));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      Interval dot = Interval::zero(p);
      for (std::size_t d = 0; d < pts[i].size(); ++d)
        dot = dot + as_interval(pts[i][d]) * as_interval(pts[j][d]);
      if (!certainly_le(dot / (norms[i] * norms[j]), cos_cap)) return j;
    }
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace detail

struct GreedyPacking {
  long count = 0;
  std::uint64_t trial = 0;
  long polygon = 0;
  std::vector<std::vector<double>> points;
};

// Randomized lower-bound oracle for A(n, theta): each trial samples Gaussian
// directions and keeps those whose pairwise cosines stay at or below
// cos(theta.lo), so the count lower-bounds A at the same endpoint the upper
// bounds report against. Trial 0 proposes the signed coordinate axes, which
// recovers cross-polytope optima that random directions hit with probability
// zero. The best configuration is re-verified in interval arithmetic before
// its size is reported, and results are deterministic in (seed, trials)
// regardless of thread count.
inline GreedyPacking greedy_lower_bound_full(long n, const Interval& theta,
                                             long trials, std::uint64_t seed,
                                             int parallelism = 0) {
  PackingQuery{n, theta, PackingMethod::Best}.validate();
  if (trials < 1) throw DomainError("greedy_lower_bound: trials must be positive");
  mpfr_prec_t p = 128;
  Interval cos_cap = cos(theta, p).upper();
  double thr = mpfr_get_d(cos_cap.lo(), MPFR_RNDD);
  long candidates = 96 + 8 * n;

  auto run_trial = [&](std::uint64_t t) {
    std::vector<std::vector<double>> kept;
    auto offer = [&](std::vector<double> v) {
      double norm2 = 0;
      for (double x : v) norm2 += x * x;
      if (norm2 < 1e-12) return;
      double inv = 1.0 / std::sqrt(norm2);
      for (double& x : v) x *= inv;
      for (const auto& w : kept) {
        double dot = 0;
        for (long d = 0; d < n; ++d)
          dot += v[static_cast<std::size_t>(d)] * w[static_cast<std::size_t>(d)];
        if (dot > thr) return;
      }
      kept.push_back(std::move(v));
    };
    if (t == 0) {
      for (long d = 0; d < n; ++d) {
        for (double sign : {1.0, -1.0}) {
          std::vector<double> axis(static_cast<std::size_t>(n), 0.0);
          axis[static_cast<std::size_t>(d)] = sign;
          offer(std::move(axis));
        }
      }
      return kept;
    }
    std::uint64_t base =
        detail::splitmix64(seed ^ detail::splitmix64(0x243f6a8885a308d3ull + t));
    for (long c = 0; c < candidates; ++c) {
      std::uint64_t cbase =
          detail::splitmix64(base + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(c));
      offer(detail::gaussian_vector(cbase, n));
    }
    return kept;
  };

  unsigned hw = std::thread::hardware_concurrency();
  int nthreads = parallelism > 0 ? parallelism : (hw ? static_cast<int>(hw) : 2);
  nthreads = static_cast<int>(std::min<long>(nthreads, trials));
  std::vector<GreedyPacking> local(static_cast<std::size_t>(nthreads));
  std::vector<std::thread> pool;
  for (int w = 0; w < nthreads; ++w) {
    pool.emplace_back([&, w]() {
      GreedyPacking& best = local[static_cast<std::size_t>(w)];
      best.trial = static_cast<std::uint64_t>(trials);
      for (long t = w; t < trials; t += nthreads) {
        auto kept = run_trial(static_cast<std::uint64_t>(t));
        long sz = static_cast<long>(kept.size());
        if (sz > best.count ||
            (sz == best.count && static_cast<std::uint64_t>(t) < best.trial)) {
          best.count = sz;
          best.trial = static_cast<std::uint64_t>(t);
          best.points = std::move(kept);
        }
      }
    });
  }
  for (auto& th : pool) th.join();

  GreedyPacking best;
  best.trial = static_cast<std::uint64_t>(trials);
  for (auto& cand : local) {
    if (cand.count > best.count ||
        (cand.count == best.count && cand.trial < best.trial)) {
      best = std::move(cand);
    }
  }

  for (;;) {
    std::size_t offender = detail::packing_offender(best.points, cos_cap, p);
    if (offender == static_cast<std::size_t>(-1)) break;
    best.points.erase(best.points.begin() + static_cast<std::ptrdiff_t>(offender));
    best.count = static_cast<long>(best.points.size());
  }

  // Regular K-gon certificate: K points spaced 2pi/K on a great circle form
  // a packing whenever K * theta.lo <= 2pi, certified in interval arithmetic
  // with no coordinates involved. Tight optima (regular pentagon at 2pi/5)
  // are unreachable through floating-point coordinates, so this arithmetic
  // route is what recovers them.
  if (n >= 2) {
    mpfr_prec_t pk = std::max<mpfr_prec_t>(p, theta.prec()) + 16;
    Interval two_pi = Interval::pi(pk) * Interval::point(2, pk);
    long k = static_cast<long>(floor_hi(two_pi / theta.lower()).get_si());
    while (k >= 2 &&
           !certainly_le(Interval::point(k, pk) * theta.lower(), two_pi))
      --k;
    if (k >= 2) best.polygon = k;
    best.count = std::max(best.count, best.polygon);
  }
  return best;
}

inline long greedy_lower_bound(long n, const Interval& theta, long trials,
                               std::uint64_t seed, int parallelism = 0) {
  return greedy_lower_bound_full(n, theta, trials, seed, parallelism).count;
}

}  // namespace certnum
