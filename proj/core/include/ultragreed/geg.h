// Copyright 2026 The ultragreed Authors.
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

#ifndef ULTRAGREED_GEG_H_
#define ULTRAGREED_GEG_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ultragreed/error.h"
#include "ultragreed/field.h"
#include "ultragreed/setsys.h"
#include "ultragreed/ultra.h"

namespace ultragreed {

// Dense row-major matrix over any ring-like value type. T need not be
// default-constructible, so sizing always takes a fill value.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
      throw DomainError("matrix data does not match its shape");
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// sub_{rows}^{cols} M: entry (a, b) is M(rows[a], cols[b]). Repeated indices
// are allowed.
template <typename T>
Matrix<T> Submatrix(const Matrix<T>& m, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols) {
  std::vector<T> data;
  data.reserve(rows.size() * cols.size());
  for (auto r : rows) {
    for (auto c : cols) {
      if (r >= m.rows() || c >= m.cols()) {
        throw DomainError("submatrix index out of range");
      }
      data.push_back(m(r, c));
    }
  }
  return Matrix<T>(rows.size(), cols.size(), std::move(data));
}

// M with row `r` and column `c` deleted; pass npos to keep all of either.
template <typename T>
Matrix<T> Minor(const Matrix<T>& m, std::size_t r, std::size_t c) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i != r) rows.push_back(i);
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (j != c) cols.push_back(j);
  }
  return Submatrix<T>(m, rows, cols);
}

inline constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

// Largest size accepted by DivisionFreeDeterminant.
inline constexpr std::size_t kDivisionFreeLimit = 16;

// Determinant over a commutative ring by Laplace expansion along rows,
// memoized over column subsets: O(2^n n) ring operations. `one` supplies the
// ring's identity (needed for the empty matrix and to form zero).
template <typename T>
T DivisionFreeDeterminant(const Matrix<T>& m, const T& one) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > kDivisionFreeLimit) {
    throw DomainError("division-free determinant limited to 16x16");
  }
  const T zero = one - one;
  // det[S]: determinant of the last |S| rows restricted to the columns in S.
  std::vector<T> det(std::size_t{1} << n, zero);
  det[0] = one;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(s));
    T acc = zero;
    std::size_t before = 0;  // columns of s left of c, for the sign
    for (std::size_t c = 0; c < n; ++c) {
      if (!(s >> c & 1)) continue;
      const T& entry = m(row, c);
      const T& rest = det[s & ~(Mask{1} << c)];
      if (before % 2 == 0) {
        acc += entry * rest;
      } else {
        acc -= entry * rest;
      }
      ++before;
    }
    det[s] = acc;
  }
  return det.back();
}

// Exact determinant over a field by Gaussian elimination.
FieldElement Determinant(const Field& field, const Matrix<FieldElement>& m);

// Rank of a matrix given as field codes.
std::size_t RankOfCodes(const Field& field, std::size_t rows, std::size_t cols,
                        std::vector<std::uint64_t> codes);

Matrix<FieldElement> MatrixProduct(const Field& field,
                                   const Matrix<FieldElement>& a,
                                   const Matrix<FieldElement>& b);

// An m x |E| matrix over GF(q) whose column e is the vector v_e. Labels are
// kept in ascending order; m >= |E|.
class VectorFamily {
 public:
  VectorFamily() : field_(Field::Make(2)) {}
  // `entries` is row-major m x labels.size() codes, columns in the order of
  // `labels`. Throws DomainError on m < |E|, duplicate labels or bad codes.
  VectorFamily(Field field, std::size_t m, std::vector<Label> labels,
               std::vector<std::uint64_t> entries);
  static VectorFamily FromElements(Field field, std::vector<Label> labels,
                                   const Matrix<FieldElement>& m);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return labels_.size(); }
  const std::vector<Label>& labels() const { return labels_; }
  std::uint64_t code(std::size_t i, std::size_t j) const {
    return entries_[i * labels_.size() + j];
  }
  FieldElement entry(std::size_t i, std::size_t j) const {
    return field_.FromCode(code(i, j));
  }
  const std::vector<std::uint64_t>& codes() const { return entries_; }
  Matrix<FieldElement> AsMatrix() const;
  // The column vector v_e.
  std::vector<FieldElement> Column(const Label& e) const;
  // Throws DomainError for an unknown label.
  std::size_t ColumnOf(const Label& e) const;

  bool operator==(const VectorFamily& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && labels_ == o.labels_ &&
           entries_ == o.entries_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::vector<Label> labels_;
  std::vector<std::uint64_t> entries_;
};

// Whether the vectors pi_{|F|}(v_e), e in F, are linearly independent.
bool GegMember(const VectorFamily& fam, std::span<const Label> f);
bool GegMemberMask(const VectorFamily& fam, Mask f);
// Same question, answered as det(sub_{1..p}^{F} A) != 0 with columns in the
// caller's order. Duplicate labels throw.
bool GegMemberDet(const VectorFamily& fam, std::span<const Label> f);
// Every member subset. Throws DomainError above kBruteForceLimit labels.
SetSystem GegEnumerate(const VectorFamily& fam);

// Checks det(X without row i) det Y = sum_q (-1)^(n+q) det(X | Y_q)
// det(Y without row i and column q) for X of size n x (n-1), Y of size n x n
// and a 0-based row i (q is 1-based in the sign). Throws on bad shapes.
template <typename T>
bool PluckerCheck(const Matrix<T>& x, const Matrix<T>& y, std::size_t i,
                  const T& one) {
  const std::size_t n = y.rows();
  if (n == 0 || !y.square() || x.rows() != n || x.cols() + 1 != n) {
    throw DomainError("Pluecker check needs X of size n x (n-1), Y n x n");
  }
  if (i >= n) throw DomainError("row index out of range");
  const T lhs = DivisionFreeDeterminant(Minor(x, i, kNoIndex), one) *
                DivisionFreeDeterminant(y, one);
  T rhs = one - one;
  for (std::size_t q = 0; q < n; ++q) {
    Matrix<T> xy(n, n, one);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c + 1 < n; ++c) xy(r, c) = x(r, c);
      xy(r, n - 1) = y(r, q);
    }
    const T term = DivisionFreeDeterminant(xy, one) *
                   DivisionFreeDeterminant(Minor(y, i, q), one);
    // (-1)^(n + (q+1))
    if ((n + q + 1) % 2 == 0) {
      rhs += term;
    } else {
      rhs -= term;
    }
  }
  return lhs == rhs;
}

// Value of the polynomial with coefficients `f` (constant term first) at u.
template <typename T>
T EvaluatePolynomial(std::span<const T> f, const T& u, const T& one) {
  T acc = one - one;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * u + *it;
  return acc;
}

// Checks det(f_j(u_i)) = prod_{i>j} (u_i - u_j) where f_j (0-based j) is a
// monic polynomial of degree j. Throws when a degree or leading coefficient
// is wrong or the counts differ.
template <typename T>
bool VandermondeMonicCheck(const std::vector<std::vector<T>>& fs,
                           const std::vector<T>& us, const T& one) {
  const std::size_t m = fs.size();
  if (us.size() != m) {
    throw DomainError("need as many evaluation points as polynomials");
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (fs[j].size() != j + 1 || !(fs[j].back() == one)) {
      throw DomainError("polynomial " + std::to_string(j + 1) +
                        " is not monic of degree " + std::to_string(j));
    }
  }
  Matrix<T> v(m, m, one);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      v(i, j) = EvaluatePolynomial<T>(fs[j], us[i], one);
    }
  }
  T prod = one;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) prod = prod * (us[i] - us[j]);
  }
  return DivisionFreeDeterminant(v, one) == prod;
}

}  // namespace ultragreed

#endif  // ULTRAGREED_GEG_H_
