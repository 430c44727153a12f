#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "pisotorus/exact.hpp"

namespace pisotorus {

/// Certified real enclosure: center +/- radius. The center is an MPFR
/// float at the ball's working precision; the radius is a low-precision
/// MPFR float maintained with upward rounding. Every operation returns a
/// ball that contains the exact image of its input balls.
class RealBall {
 public:
  RealBall();  // exact zero at 64-bit precision
  RealBall(const RealBall& o);
  RealBall(RealBall&& o) noexcept;
  RealBall& operator=(const RealBall& o);
  RealBall& operator=(RealBall&& o) noexcept;
  ~RealBall();

  static RealBall exact(const Rat& value, mpfr_prec_t prec);
  static RealBall exact(long value, mpfr_prec_t prec);
  /// Ball covering [lo, hi] (exact rational endpoints).
  static RealBall from_interval(const Rat& lo, const Rat& hi, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  RealBall operator+(const RealBall& o) const;
  RealBall operator-(const RealBall& o) const;
  RealBall operator*(const RealBall& o) const;
  RealBall operator/(const RealBall& o) const;  // requires o certified nonzero
  RealBall operator-() const;

  RealBall inv() const;
  RealBall abs() const;
  /// Exact range of x^2 over the ball (never dips below 0).
  RealBall square() const;
  RealBall sqrt() const;  // requires lower bound >= 0
  RealBall log() const;   // requires lower bound > 0

  /// Enclosure of max(a, b) as sets.
  static RealBall max_enclosure(const RealBall& a, const RealBall& b);

  bool is_exact() const;
  bool contains_zero() const;
  bool contains(const Rat& q) const;
  /// Certified sign tests (false means "not provable at this radius").
  bool certainly_positive() const;
  bool certainly_negative() const;
  /// True when this ball's interval lies strictly above q.
  bool certainly_greater(const Rat& q) const;

  Rat lower_bound() const;  // exact rational <= every point of the ball
  Rat upper_bound() const;  // exact rational >= every point of the ball
  Rat center_rat() const;
  Rat radius_rat() const;

  double center_double() const;
  double radius_double() const;

  /// Decimal serialization: center rounded to `digits` significant digits,
  /// radius inflated to absorb the decimal rounding, so the printed pair
  /// still encloses the true value. Radius printed with upward rounding.
  std::pair<std::string, std::string> to_decimal(long digits) const;

  /// Compares centers (for deterministic ordering; not a certified order).
  int cmp_center(const RealBall& o) const;

  // Low-level access for the root engine.
  const mpfr_t& center() const { return c_; }
  const mpfr_t& radius() const { return r_; }
  static RealBall from_mpfr(const mpfr_t center, const mpfr_t radius, mpfr_prec_t prec);

 private:
  friend class ComplexBall;
  void init(mpfr_prec_t prec);
  mpfr_t c_;
  mpfr_t r_;
  mpfr_prec_t prec_;
};

/// Rectangular complex enclosure: independent real and imaginary balls.
class ComplexBall {
 public:
  ComplexBall() = default;
  ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}
  static ComplexBall real(RealBall re);

  const RealBall& re() const { return re_; }
  const RealBall& im() const { return im_; }

  ComplexBall operator+(const ComplexBall& o) const;
  ComplexBall operator-(const ComplexBall& o) const;
  ComplexBall operator*(const ComplexBall& o) const;
  ComplexBall operator-() const;
  ComplexBall conj() const;

  /// Certified enclosure of |z|.
  RealBall modulus() const;

  bool contains_zero() const;
  bool is_real_exact() const { return im_.is_exact() && im_.contains_zero(); }

 private:
  RealBall re_, im_;
};

/// Decimal string of an MPFR value: scientific form with `digits`
/// significant digits under the given rounding.
std::string mpfr_to_decimal(const mpfr_t x, long digits, mpfr_rnd_t rnd);

}  // namespace pisotorus
