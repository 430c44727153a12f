#include "pisotorus/linalg.hpp"

#include <stdexcept>

namespace pisotorus {

ZMatrix ZMatrix::identity(int n) {
  ZMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::operator*(const ZMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  ZMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

Int ZMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; divisions are exact.
  std::vector<Int> w(a_);
  auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w[idx(k, k)] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (w[idx(i, k)] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w[idx(k, j)], w[idx(pivot, j)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = w[idx(i, j)] * w[idx(k, k)] - w[idx(i, k)] * w[idx(k, j)];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        w[idx(i, j)] = t;
      }
    prev = w[idx(k, k)];
  }
  Int d = w[idx(n - 1, n - 1)];
  return sign > 0 ? d : Int(-d);
}

IntPolynomial ZMatrix::char_poly() const {
  QMatrix q(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) q.at(i, j) = Rat(at(i, j));
  return q.char_poly().to_int_primitive();
}

ZMatrix ZMatrix::exterior_power(int k) const {
  if (rows_ != cols_) throw std::invalid_argument("exterior power of non-square matrix");
  if (k < 0 || k > rows_) throw std::invalid_argument("exterior power index out of range");
  auto subs = subsets_lex(rows_, k);
  int dim = static_cast<int>(subs.size());
  ZMatrix r(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      ZMatrix minor(k, k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) minor.at(a, b) = at(subs[i][a], subs[j][b]);
      r.at(i, j) = minor.det();
    }
  return r;
}

std::vector<std::vector<long>> ZMatrix::mod(long q) const {
  std::vector<std::vector<long>> r(rows_, std::vector<long>(cols_));
  Int qq(q);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      Int m;
      mpz_fdiv_r(m.get_mpz_t(), at(i, j).get_mpz_t(), qq.get_mpz_t());
      r[i][j] = m.get_si();
    }
  return r;
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Rat QMatrix::trace() const {
  Rat t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Rat QMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  // Clear denominators row by row, then run Bareiss on the integer matrix.
  ZMatrix z(rows_, cols_);
  Rat scale = 1;
  for (int i = 0; i < rows_; ++i) {
    Int l = 1;
    for (int j = 0; j < cols_; ++j) l = lcm_int(l, at(i, j).get_den());
    scale /= Rat(l);
    for (int j = 0; j < cols_; ++j) {
      Rat s = at(i, j) * Rat(l);
      s.canonicalize();
      z.at(i, j) = s.get_num();
    }
  }
  Rat d = Rat(z.det()) * scale;
  d.canonicalize();
  return d;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  int n = rows_;
  QMatrix w = *this;
  QMatrix inv = identity(n);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (w.at(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw domain_error("singular matrix");
    if (pivot != k)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(k, j), w.at(pivot, j));
        std::swap(inv.at(k, j), inv.at(pivot, j));
      }
    Rat p = w.at(k, k);
    for (int j = 0; j < n; ++j) {
      w.at(k, j) /= p;
      inv.at(k, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      Rat f = w.at(i, k);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        w.at(i, j) -= f * w.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

RatPolynomial QMatrix::char_poly() const {
  if (rows_ != cols_) throw std::invalid_argument("char_poly of non-square matrix");
  int n = rows_;
  // Faddeev-LeVerrier: N_1 = A, c_{n-1} = -tr N_1,
  // N_{k} = A (N_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(N_k)/k.
  std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
  c[static_cast<size_t>(n)] = 1;
  QMatrix nk = *this;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      QMatrix shifted = nk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += c[static_cast<size_t>(n - k + 1)];
      nk = (*this) * shifted;
    }
    c[static_cast<size_t>(n - k)] = -nk.trace() / Rat(static_cast<long>(k));
  }
  return RatPolynomial(std::move(c));
}

bool QMatrix::is_integral() const {
  for (const auto& x : a_)
    if (!is_integer(x)) return false;
  return true;
}

ZMatrix QMatrix::to_int() const {
  if (!is_integral()) throw std::invalid_argument("matrix has non-integer entries");
  ZMatrix z(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) z.at(i, j) = at(i, j).get_num();
  return z;
}

uint64_t order_mod(const ZMatrix& m, long q, uint64_t cap) {
  if (m.rows() != m.cols()) throw std::invalid_argument("order_mod of non-square matrix");
  int n = m.rows();
  auto base = m.mod(q);
  auto mulmod = [&](const std::vector<std::vector<long>>& x,
                    const std::vector<std::vector<long>>& y) {
    std::vector<std::vector<long>> r(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        long xik = x[i][k];
        if (xik == 0) continue;
        for (int j = 0; j < n; ++j) r[i][j] = (r[i][j] + xik * y[k][j]) % q;
      }
    return r;
  };
  auto is_identity = [&](const std::vector<std::vector<long>>& x) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (x[i][j] != (i == j ? 1 % q : 0)) return false;
    return true;
  };
  auto acc = base;
  for (uint64_t k = 1; k <= cap; ++k) {
    if (is_identity(acc)) return k;
    acc = mulmod(acc, base);
  }
  throw domain_error("matrix order mod q exceeds cap (is it invertible mod q?)");
}

std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace pisotorus
