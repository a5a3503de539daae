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

#include "ultragreed/geg.h"

#include <algorithm>
#include <bit>

namespace ultragreed {

FieldElement Determinant(const Field& field, const Matrix<FieldElement>& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::uint64_t> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (!(m.data()[i].field() == field)) {
      throw DomainError("matrix entry from a different field");
    }
    a[i] = m.data()[i].code();
  }
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) return field.zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[col * n + j]);
      }
      det = field.Neg(det);
    }
    const std::uint64_t p = a[col * n + col];
    det = field.Mul(det, p);
    const std::uint64_t inv = field.Inv(p);
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::uint64_t f = field.Mul(a[r * n + col], inv);
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) {
        a[r * n + j] = field.Sub(a[r * n + j], field.Mul(f, a[col * n + j]));
      }
    }
  }
  return field.FromCode(det);
}

std::size_t RankOfCodes(const Field& field, std::size_t rows, std::size_t cols,
                        std::vector<std::uint64_t> a) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::swap(a[piv * cols + j], a[rank * cols + j]);
      }
    }
    const std::uint64_t inv = field.Inv(a[rank * cols + col]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t f = field.Mul(a[r * cols + col], inv);
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j) {
        a[r * cols + j] =
            field.Sub(a[r * cols + j], field.Mul(f, a[rank * cols + j]));
      }
    }
    ++rank;
  }
  return rank;
}

Matrix<FieldElement> MatrixProduct(const Field& field,
                                   const Matrix<FieldElement>& a,
                                   const Matrix<FieldElement>& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shapes do not chain");
  Matrix<FieldElement> out(a.rows(), b.cols(), field.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      FieldElement acc = field.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

VectorFamily::VectorFamily(Field field, std::size_t m,
                           std::vector<Label> labels,
                           std::vector<std::uint64_t> entries)
    : field_(std::move(field)), rows_(m) {
  const std::size_t n = labels.size();
  if (m < n) {
    throw DomainError("vector family needs at least as many rows (" +
                      std::to_string(m) + ") as columns (" +
                      std::to_string(n) + ")");
  }
  if (entries.size() != m * n) {
    throw DomainError("vector family entries do not match its shape");
  }
  for (auto c : entries) {
    if (c >= field_.order()) {
      throw DomainError("entry code " + std::to_string(c) + " outside " +
                        field_.ToString());
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return labels[a] < labels[b];
  });
  for (std::size_t k = 0; k < n; ++k) {
    labels_.push_back(labels[order[k]]);
    if (k > 0 && labels_[k] == labels_[k - 1]) {
      throw DomainError("duplicate column label " + labels_[k].ToString());
    }
  }
  entries_.resize(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      entries_[i * n + k] = entries[i * n + order[k]];
    }
  }
}

VectorFamily VectorFamily::FromElements(Field field, std::vector<Label> labels,
                                        const Matrix<FieldElement>& m) {
  if (m.cols() != labels.size()) {
    throw DomainError("one label per column required");
  }
  std::vector<std::uint64_t> codes;
  codes.reserve(m.data().size());
  for (const auto& e : m.data()) {
    if (!(e.field() == field)) {
      throw DomainError("matrix entry from a different field");
    }
    codes.push_back(e.code());
  }
  return VectorFamily(std::move(field), m.rows(), std::move(labels),
                      std::move(codes));
}

Matrix<FieldElement> VectorFamily::AsMatrix() const {
  Matrix<FieldElement> out(rows_, cols(), field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols(); ++j) out(i, j) = entry(i, j);
  }
  return out;
}

std::size_t VectorFamily::ColumnOf(const Label& e) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), e);
  if (it == labels_.end() || !(*it == e)) {
    throw DomainError("unknown column label " + e.ToString());
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<FieldElement> VectorFamily::Column(const Label& e) const {
  const std::size_t j = ColumnOf(e);
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(entry(i, j));
  return out;
}

namespace {

bool IndependentPrefix(const VectorFamily& fam,
                       std::span<const std::size_t> cols) {
  const std::size_t k = cols.size();
  std::vector<std::uint64_t> codes(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) codes[i * k + j] = fam.code(i, cols[j]);
  }
  return RankOfCodes(fam.field(), k, k, std::move(codes)) == k;
}

}  // namespace

bool GegMember(const VectorFamily& fam, std::span<const Label> f) {
  std::vector<std::size_t> cols;
  for (const auto& l : f) cols.push_back(fam.ColumnOf(l));
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
    return false;  // a repeated vector is dependent
  }
  return IndependentPrefix(fam, cols);
}

bool GegMemberMask(const VectorFamily& fam, Mask f) {
  const auto cols = MaskToIndices(f);
  if (!cols.empty() && cols.back() >= fam.cols()) {
    throw DomainError("mask references columns outside the family");
  }
  return IndependentPrefix(fam, cols);
}

bool GegMemberDet(const VectorFamily& fam, std::span<const Label> f) {
  std::vector<std::size_t> cols, rows;
  for (const auto& l : f) {
    const std::size_t c = fam.ColumnOf(l);
    if (std::find(cols.begin(), cols.end(), c) != cols.end()) {
      throw DomainError("repeated label " + l.ToString());
    }
    cols.push_back(c);
    rows.push_back(rows.size());
  }
  const auto sub = Submatrix(fam.AsMatrix(), rows, cols);
  return !Determinant(fam.field(), sub).is_zero();
}

SetSystem GegEnumerate(const VectorFamily& fam) {
  const std::size_t n = fam.cols();
  if (n > kBruteForceLimit) {
    throw DomainError("vector family with " + std::to_string(n) +
                      " columns exceeds the enumeration limit " +
                      std::to_string(kBruteForceLimit));
  }
  std::vector<Mask> members;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (IndependentPrefix(fam, MaskToIndices(s))) members.push_back(s);
  }
  return SetSystem(fam.labels(), members);
}

}  // namespace ultragreed
