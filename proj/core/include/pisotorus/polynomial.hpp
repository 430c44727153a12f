#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pisotorus/exact.hpp"

namespace pisotorus {

class RatPolynomial;

/// Univariate polynomial with exact integer coefficients, stored in
/// ascending degree order. The zero polynomial has degree() == -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);

  /// Parses either the term grammar ("x^2 - x - 1", "3x", "-7") or a
  /// bracketed ascending coefficient list ("[-1, -1, 1]"). Throws
  /// parse_error with the offending position.
  static IntPolynomial parse(const std::string& text);

  /// Canonical print: descending terms, explicit signs, `x` and `^`.
  std::string str() const;

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const Int& coeff(int k) const;
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  IntPolynomial derivative() const;
  Int content() const;
  /// Content-free copy with positive leading coefficient.
  IntPolynomial primitive_part() const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  RatPolynomial to_rat() const;

 private:
  std::vector<Int> coeffs_;  // ascending, trailing zeros trimmed
};

class parse_error : public domain_error {
 public:
  parse_error(const std::string& what, size_t position)
      : domain_error(what), position(position) {}
  size_t position;
};

/// Polynomial over Q; the workhorse for gcd, Sturm chains, division.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rat> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rat& coeff(int k) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  RatPolynomial operator+(const RatPolynomial& o) const;
  RatPolynomial operator-(const RatPolynomial& o) const;
  RatPolynomial operator*(const RatPolynomial& o) const;
  RatPolynomial operator*(const Rat& c) const;
  RatPolynomial operator-() const;
  bool operator==(const RatPolynomial& o) const { return coeffs_ == o.coeffs_; }

  RatPolynomial derivative() const;
  Rat eval(const Rat& x) const;
  RatPolynomial monic() const;

  /// Euclidean division; returns {quotient, remainder}.
  std::pair<RatPolynomial, RatPolynomial> divrem(const RatPolynomial& d) const;

  /// Monic gcd.
  static RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

  /// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
  static std::tuple<RatPolynomial, RatPolynomial, RatPolynomial> extended_gcd(
      const RatPolynomial& a, const RatPolynomial& b);

  /// this / gcd(this, this'); monic.
  RatPolynomial squarefree_part() const;

  /// Clears denominators and content: the unique primitive integer
  /// polynomial with positive leading coefficient spanning the same line.
  IntPolynomial to_int_primitive() const;

 private:
  std::vector<Rat> coeffs_;
};

/// One endpoint of a root-counting interval; std::nullopt means the
/// infinite end (-inf for lo, +inf for hi).
using IntervalEnd = std::optional<Rat>;

/// Sturm chain of the squarefree part of p. Counts distinct real roots
/// on half-open intervals (lo, hi] with exact rational arithmetic.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& p);

  /// Sign variations of the chain at x (nullopt handles +/-inf via `neg`).
  int variations_at(const IntervalEnd& x, bool at_minus_infinity) const;

  /// Distinct real roots of the squarefree part in (lo, hi].
  int count(const IntervalEnd& lo, const IntervalEnd& hi) const;

  const std::vector<RatPolynomial>& chain() const { return chain_; }

 private:
  std::vector<RatPolynomial> chain_;
};

/// Exact count of distinct real roots of `p` in (lo, hi].
/// Squarefree-ing is internal; no rounding anywhere.
int sturm_count(const IntPolynomial& p, const IntervalEnd& lo, const IntervalEnd& hi);

/// Cauchy bound: every complex root has modulus < bound.
Rat root_bound(const IntPolynomial& p);

}  // namespace pisotorus
