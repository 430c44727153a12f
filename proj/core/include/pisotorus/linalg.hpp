#pragma once

#include <cstdint>
#include <vector>

#include "pisotorus/polynomial.hpp"

namespace pisotorus {

/// Dense matrix with exact integer entries, row-major.
class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}
  static ZMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  ZMatrix operator*(const ZMatrix& o) const;
  bool operator==(const ZMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  /// Exact determinant (fraction-free Bareiss elimination).
  Int det() const;

  /// Characteristic polynomial, monic with integer coefficients.
  IntPolynomial char_poly() const;

  /// k-th exterior power: rows/columns indexed by the k-subsets of
  /// {0..n-1} in lexicographic order, entries the corresponding minors.
  ZMatrix exterior_power(int k) const;

  /// Entrywise reduction mod q (entries in [0, q)).
  std::vector<std::vector<long>> mod(long q) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

/// Dense matrix over Q, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;

  Rat trace() const;
  Rat det() const;

  /// Gauss-Jordan inverse. Throws domain_error when singular.
  QMatrix inverse() const;

  /// Monic characteristic polynomial over Q (Faddeev-LeVerrier).
  RatPolynomial char_poly() const;

  bool is_integral() const;
  ZMatrix to_int() const;  // requires is_integral()

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// Order of M in GL_n(Z/qZ): least k >= 1 with M^k = I mod q.
/// Throws domain_error if M is singular mod q or k exceeds `cap`.
uint64_t order_mod(const ZMatrix& m, long q, uint64_t cap = 10000000);

/// Lexicographically ordered k-subsets of {0..n-1}.
std::vector<std::vector<int>> subsets_lex(int n, int k);

}  // namespace pisotorus
