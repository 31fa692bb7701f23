// Copyright 2026 The yhk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef YHK_MATRIX_HPP
#define YHK_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "yhk/errors.hpp"
#include "yhk/scalar.hpp"

namespace yhk {

/// Dense row-major matrix over an exact field (Scalar or CycloNum).
template <typename T>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), T(0L)) {
    if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix size");
  }

  static BasicMatrix identity(int n) {
    BasicMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }
  static BasicMatrix diagonal(const std::vector<T>& d) {
    BasicMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  bool is_zero() const {
    for (const auto& x : a_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
  bool is_identity() const { return is_square() && *this == identity(rows_); }

  BasicMatrix& operator+=(const BasicMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  BasicMatrix& operator-=(const BasicMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  BasicMatrix& operator*=(const T& c) {
    if (c.is_zero()) {
      for (auto& x : a_) x = T(0L);
    } else {
      for (auto& x : a_) {
        if (!x.is_zero()) x *= c;
      }
    }
    return *this;
  }
  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) { return a += b; }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) { return a -= b; }
  friend BasicMatrix operator*(const T& c, BasicMatrix a) { return a *= c; }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch in product");
    BasicMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (!y.is_zero()) c(i, j) += x * y;
        }
      }
    }
    return c;
  }

  friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const BasicMatrix& a, const BasicMatrix& b) { return !(a == b); }

  T trace() const {
    T s(0L);
    for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }
  /// trace(a * b) without forming the product.
  friend T trace_of_product(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows_ || a.rows_ != b.cols_) throw InvalidArgument("matrix shape mismatch in trace");
    T s(0L);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        if (!a(i, k).is_zero() && !b(k, i).is_zero()) s += a(i, k) * b(k, i);
      }
    }
    return s;
  }

  BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// Rows listed in `idx`, in that order.
  BasicMatrix select_rows(const std::vector<int>& idx) const {
    BasicMatrix m(static_cast<int>(idx.size()), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (int j = 0; j < cols_; ++j) m(static_cast<int>(i), j) = (*this)(idx[i], j);
    }
    return m;
  }
  BasicMatrix select_cols(const std::vector<int>& idx) const { return transpose().select_rows(idx).transpose(); }

  /// Block-diagonal sum.
  friend BasicMatrix direct_sum(const BasicMatrix& a, const BasicMatrix& b) {
    BasicMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    }
    for (int i = 0; i < b.rows_; ++i) {
      for (int j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
    }
    return m;
  }
  friend BasicMatrix kronecker(const BasicMatrix& a, const BasicMatrix& b) {
    BasicMatrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) {
        if (a(i, j).is_zero()) continue;
        for (int k = 0; k < b.rows_; ++k) {
          for (int l = 0; l < b.cols_; ++l) {
            if (!b(k, l).is_zero()) m(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
          }
        }
      }
    }
    return m;
  }
  /// Columns of a followed by columns of b.
  friend BasicMatrix hconcat(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.rows_ != b.rows_) throw InvalidArgument("row count mismatch in hconcat");
    BasicMatrix m(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
      for (int j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      s += "[";
      for (int j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
      s += "]\n";
    }
    return s;
  }

 private:
  void check_same(const BasicMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> a_;
};

using Matrix = BasicMatrix<Scalar>;
using CMatrix = BasicMatrix<CycloNum>;

/// Rough size of an entry; pivots with small size keep elimination cheap.
inline std::size_t entry_size(const Scalar& x) { return x.num().size() + x.den().size(); }
inline std::size_t entry_size(const CycloNum&) { return 1; }

/// Reduced row echelon form in place; returns the pivot columns.
template <typename T>
std::vector<int> rref(BasicMatrix<T>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int best = -1;
    std::size_t best_size = 0;
    for (int i = row; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      std::size_t s = entry_size(m(i, col));
      if (best < 0 || s < best_size) {
        best = i;
        best_size = s;
      }
    }
    if (best < 0) continue;
    if (best != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(row, j));
    }
    const T inv = m(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const T f = m(i, col);
      for (int j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename T>
int rank(BasicMatrix<T> m) {
  return static_cast<int>(rref(m).size());
}

/// Basis of the null space, as the columns of the result.
template <typename T>
BasicMatrix<T> kernel(BasicMatrix<T> m) {
  const std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(static_cast<std::size_t>(m.cols()), false);
  for (int p : piv) is_piv[static_cast<std::size_t>(p)] = true;
  std::vector<int> free;
  for (int j = 0; j < m.cols(); ++j) {
    if (!is_piv[static_cast<std::size_t>(j)]) free.push_back(j);
  }
  BasicMatrix<T> k(m.cols(), static_cast<int>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    const int fc = free[f];
    k(fc, static_cast<int>(f)) = T(1L);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      k(piv[r], static_cast<int>(f)) = -m(static_cast<int>(r), fc);
    }
  }
  return k;
}

/// A subspace given by the columns of `basis` in reduced column echelon
/// form: rows `pivots` of the basis form an identity matrix.
template <typename T>
struct BasicSubspace {
  BasicMatrix<T> basis;
  std::vector<int> pivots;

  int dim() const { return basis.cols(); }
  int ambient() const { return basis.rows(); }
};

using Subspace = BasicSubspace<Scalar>;

/// Column space of m in reduced column echelon form.
template <typename T>
BasicSubspace<T> column_space(const BasicMatrix<T>& m) {
  BasicMatrix<T> t = m.transpose();
  std::vector<int> piv = rref(t);
  std::vector<int> keep(piv.size());
  for (std::size_t i = 0; i < piv.size(); ++i) keep[i] = static_cast<int>(i);
  return {t.select_rows(keep).transpose(), piv};
}

/// The span of the union of two subspaces' bases.
template <typename T>
BasicSubspace<T> subspace_sum(const BasicSubspace<T>& a, const BasicSubspace<T>& b) {
  return column_space(hconcat(a.basis, b.basis));
}

/// Coordinates of the columns of v in the subspace s; throws CheckFailure
/// when a column lies outside s.
template <typename T>
BasicMatrix<T> coordinates(const BasicSubspace<T>& s, const BasicMatrix<T>& v) {
  BasicMatrix<T> c = v.select_rows(s.pivots);
  if (s.basis * c != v) throw CheckFailure("vector outside subspace");
  return c;
}

/// Inverse of a square matrix; throws DomainError when singular.
template <typename T>
BasicMatrix<T> inverse(const BasicMatrix<T>& m) {
  if (!m.is_square()) throw InvalidArgument("inverse of non-square matrix");
  const int n = m.rows();
  BasicMatrix<T> aug = hconcat(m, BasicMatrix<T>::identity(n));
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[static_cast<std::size_t>(n - 1)] != n - 1) {
    throw DomainError("singular matrix");
  }
  std::vector<int> right(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) right[static_cast<std::size_t>(j)] = n + j;
  return aug.select_cols(right);
}

/// Entrywise value at q = x.
CMatrix evaluate(const Matrix& m, const CycloNum& x);

/// a^k for k >= 0.
template <typename T>
BasicMatrix<T> power(const BasicMatrix<T>& a, int k) {
  BasicMatrix<T> r = BasicMatrix<T>::identity(a.rows());
  BasicMatrix<T> b = a;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

}  // namespace yhk

#endif  // YHK_MATRIX_HPP
