#pragma once

#include <mpfr.h>

#include <algorithm>
#include <climits>
#include <cstdio>
#include <string>
#include <utility>

#include "certnum/errors.hpp"

namespace certnum {

struct Precision {
  mpfr_prec_t bits = 128;
  int max_subdivisions = 64;

  void validate() const {
    if (bits < 24) throw DomainError("Precision.bits must be at least 24");
    if (max_subdivisions < 1) throw DomainError("Precision.max_subdivisions must be positive");
  }
};

// Closed interval [lo, hi] with MPFR endpoints, both kept at the same precision.
// Every operation rounds lo down and hi up, so the result encloses the exact
// image of the operands. NaN endpoints are never allowed to escape.
class Interval {
 public:
  Interval() { init(64); }

  explicit Interval(mpfr_prec_t prec) { init(prec); }

  Interval(const Interval& o) {
    init(o.prec());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }

  Interval(Interval&& o) noexcept {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }

  Interval& operator=(const Interval& o) {
    if (this != &o) {
      set_prec(o.prec());
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }

  Interval& operator=(Interval&& o) noexcept {
    if (this != &o) {
      mpfr_swap(lo_, o.lo_);
      mpfr_swap(hi_, o.hi_);
    }
    return *this;
  }

  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Interval point(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
  }

  static Interval zero(mpfr_prec_t prec) { return point(0, prec); }

  // Decimal string, rounded outward. Accepts anything mpfr_set_str does.
  static Interval from_decimal(const std::string& s, mpfr_prec_t prec) {
    Interval r(prec);
    if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 &&
        mpfr_nan_p(r.lo_)) {
      throw DomainError("unparseable decimal: " + s);
    }
    if (mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU) != 0 &&
        mpfr_nan_p(r.hi_)) {
      throw DomainError("unparseable decimal: " + s);
    }
    r.check("from_decimal");
    return r;
  }

  static Interval from_endpoints(const std::string& lo, const std::string& hi,
                                 mpfr_prec_t prec) {
    Interval a = from_decimal(lo, prec);
    Interval b = from_decimal(hi, prec);
    Interval r(prec);
    mpfr_set(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_set(r.hi_, b.hi_, MPFR_RNDU);
    r.check("from_endpoints");
    return r;
  }

  static Interval pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
  }

  static Interval hull(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec(), b.prec()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  // Outward rounding to a target precision, used when a module computes at
  // guard precision and reports at the caller's.
  Interval rounded_to(mpfr_prec_t prec) const {
    Interval r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo_mut() { return lo_; }
  mpfr_ptr hi_mut() { return hi_; }

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

  void check(const char* where) const {
    if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_))
      throw PrecisionExhausted(std::string("NaN endpoint in ") + where);
    if (mpfr_cmp(lo_, hi_) > 0)
      throw PrecisionExhausted(std::string("inverted interval in ") + where);
  }

  bool is_point() const { return mpfr_cmp(lo_, hi_) == 0; }
  bool contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
  }
  bool is_positive() const { return mpfr_sgn(lo_) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_) < 0; }
  bool is_nonnegative() const { return mpfr_sgn(lo_) >= 0; }
  bool is_finite() const {
    return mpfr_number_p(lo_) && mpfr_number_p(hi_);
  }

  bool contains(const Interval& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(o.hi_, hi_) <= 0;
  }
  bool contains_si(long v) const {
    return mpfr_cmp_si(lo_, v) <= 0 && mpfr_cmp_si(hi_, v) >= 0;
  }

  // hi - lo <= 2^e for the returned e (LONG_MIN for a point interval).
  long width_exponent() const {
    mpfr_t w;
    mpfr_init2(w, prec());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    long e = mpfr_zero_p(w) ? LONG_MIN : static_cast<long>(mpfr_get_exp(w));
    mpfr_clear(w);
    return e;
  }

  double width_d() const {
    mpfr_t w;
    mpfr_init2(w, prec());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
  }

  Interval mid() const {
    Interval r(prec());
    mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
    mpfr_div_2si(r.lo_, r.lo_, 1, MPFR_RNDN);
    if (mpfr_cmp(r.lo_, lo_) < 0) mpfr_set(r.lo_, lo_, MPFR_RNDN);
    if (mpfr_cmp(r.lo_, hi_) > 0) mpfr_set(r.lo_, hi_, MPFR_RNDN);
    mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
    return r;
  }

  double mid_d() const {
    Interval m = mid();
    return mpfr_get_d(m.lo_, MPFR_RNDN);
  }

  Interval lower() const {
    Interval r(prec());
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, lo_, MPFR_RNDU);
    return r;
  }

  Interval upper() const {
    Interval r(prec());
    mpfr_set(r.lo_, hi_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  Interval scalb(long k) const {
    Interval r(prec());
    mpfr_mul_2si(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_mul_2si(r.hi_, hi_, k, MPFR_RNDU);
    return r;
  }

  std::string lo_string(int digits = 20) const { return render(lo_, digits, MPFR_RNDD); }
  std::string hi_string(int digits = 20) const { return render(hi_, digits, MPFR_RNDU); }

  std::string to_string(int digits = 20) const {
    return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
  }

 private:
  void init(mpfr_prec_t prec) {
    if (prec < 2) prec = 2;
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  void set_prec(mpfr_prec_t prec) {
    if (this->prec() != prec) {
      mpfr_set_prec(lo_, prec);
      mpfr_set_prec(hi_, prec);
    }
  }

  static std::string render(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
    char buf[256];
    std::string fmt = "%." + std::to_string(digits) + "R*e";
    mpfr_snprintf(buf, sizeof buf, fmt.c_str(), rnd, v);
    return std::string(buf);
  }

  mpfr_t lo_;
  mpfr_t hi_;
};

inline mpfr_prec_t result_prec(const Interval& a, const Interval& b) {
  return std::max(a.prec(), b.prec());
}

inline Interval operator-(const Interval& x) {
  Interval r(x.prec());
  mpfr_neg(r.lo_mut(), x.hi(), MPFR_RNDD);
  mpfr_neg(r.hi_mut(), x.lo(), MPFR_RNDU);
  return r;
}

inline Interval operator+(const Interval& a, const Interval& b) {
  Interval r(result_prec(a, b));
  mpfr_add(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  r.check("add");
  return r;
}

inline Interval operator-(const Interval& a, const Interval& b) {
  Interval r(result_prec(a, b));
  mpfr_sub(r.lo_mut(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.hi_mut(), a.hi(), b.lo(), MPFR_RNDU);
  r.check("sub");
  return r;
}

inline Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = result_prec(a, b);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);

  mpfr_mul(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDD);
  mpfr_min(r.lo_mut(), r.lo_mut(), t, MPFR_RNDD);
  mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDD);
  mpfr_min(r.lo_mut(), r.lo_mut(), t, MPFR_RNDD);
  mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDD);
  mpfr_min(r.lo_mut(), r.lo_mut(), t, MPFR_RNDD);

  mpfr_mul(r.hi_mut(), a.lo(), b.lo(), MPFR_RNDU);
  mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);
  mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);
  mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);

  mpfr_clear(t);
  r.check("mul");
  return r;
}

inline Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("division by interval containing zero");
  mpfr_prec_t p = result_prec(a, b);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);

  mpfr_div(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_div(t, a.lo(), b.hi(), MPFR_RNDD);
  mpfr_min(r.lo_mut(), r.lo_mut(), t, MPFR_RNDD);
  mpfr_div(t, a.hi(), b.lo(), MPFR_RNDD);
  mpfr_min(r.lo_mut(), r.lo_mut(), t, MPFR_RNDD);
  mpfr_div(t, a.hi(), b.hi(), MPFR_RNDD);
  mpfr_min(r.lo_mut(), r.lo_mut(), t, MPFR_RNDD);

  mpfr_div(r.hi_mut(), a.lo(), b.lo(), MPFR_RNDU);
  mpfr_div(t, a.lo(), b.hi(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);
  mpfr_div(t, a.hi(), b.lo(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);
  mpfr_div(t, a.hi(), b.hi(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);

  mpfr_clear(t);
  r.check("div");
  return r;
}

inline Interval abs(const Interval& x) {
  Interval r(x.prec());
  if (x.is_nonnegative()) return x;
  if (x.is_negative()) return -x;
  mpfr_set_zero(r.lo_mut(), 1);
  mpfr_t t;
  mpfr_init2(t, x.prec());
  mpfr_neg(t, x.lo(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), t, x.hi(), MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

inline Interval sqr(const Interval& x) {
  Interval a = abs(x);
  Interval r(x.prec());
  mpfr_sqr(r.lo_mut(), a.lo(), MPFR_RNDD);
  mpfr_sqr(r.hi_mut(), a.hi(), MPFR_RNDU);
  return r;
}

inline Interval min(const Interval& a, const Interval& b) {
  Interval r(result_prec(a, b));
  mpfr_min(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

inline Interval max(const Interval& a, const Interval& b) {
  Interval r(result_prec(a, b));
  mpfr_max(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

// Certain comparisons: true only when the relation holds for every pair of
// points in the operands.
inline bool certainly_lt(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.hi(), b.lo()) < 0;
}
inline bool certainly_le(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.hi(), b.lo()) <= 0;
}
inline bool certainly_gt(const Interval& a, const Interval& b) {
  return certainly_lt(b, a);
}
inline bool certainly_ge(const Interval& a, const Interval& b) {
  return certainly_le(b, a);
}
inline bool overlaps(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.lo(), b.hi()) <= 0 && mpfr_cmp(b.lo(), a.hi()) <= 0;
}

inline Interval pow_si(const Interval& x, long n) {
  mpfr_prec_t p = x.prec();
  if (n == 0) return Interval::point(1, p);
  if (n < 0) {
    if (x.contains_zero()) throw DomainError("negative power of interval containing zero");
    return Interval::point(1, p) / pow_si(x, -n);
  }
  Interval r(p);
  bool even = (n % 2 == 0);
  if (!even || x.is_nonnegative()) {
    mpfr_pow_si(r.lo_mut(), x.lo(), n, MPFR_RNDD);
    mpfr_pow_si(r.hi_mut(), x.hi(), n, MPFR_RNDU);
  } else if (x.is_negative()) {
    mpfr_pow_si(r.lo_mut(), x.hi(), n, MPFR_RNDD);
    mpfr_pow_si(r.hi_mut(), x.lo(), n, MPFR_RNDU);
  } else {
    Interval a = abs(x);
    mpfr_set_zero(r.lo_mut(), 1);
    mpfr_pow_si(r.hi_mut(), a.hi(), n, MPFR_RNDU);
  }
  r.check("pow_si");
  return r;
}

}  // namespace certnum
