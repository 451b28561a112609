// Copyright 2026 The partid Authors.
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
#include "partid/matrix.hpp"

#include <utility>

#include "partid/error.hpp"

namespace partid {

RationalMatrix RationalMatrix::FromRows(const std::vector<Vector>& rows,
                                        std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      Fail(ErrorKind::kDimensionMismatch, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::Identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector RationalMatrix::Row(std::size_t r) const {
  return Vector(entries_.begin() + r * cols_,
                entries_.begin() + (r + 1) * cols_);
}

Vector RationalMatrix::Column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Vector> RationalMatrix::RowVectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(Row(r));
  return out;
}

void RationalMatrix::AppendRow(const Vector& row) {
  if (rows_ == 0) {
    cols_ = row.size();
  } else if (row.size() != cols_) {
    Fail(ErrorKind::kDimensionMismatch, "row length mismatch");
  }
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

RationalMatrix RationalMatrix::Transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) {
    Fail(ErrorKind::kDimensionMismatch, "matrix product shape mismatch");
  }
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  }
  return out;
}

Vector RationalMatrix::operator*(const Vector& x) const {
  if (x.size() != cols_) {
    Fail(ErrorKind::kDimensionMismatch, "matrix-vector shape mismatch");
  }
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
  }
  return out;
}

RationalMatrix ReducedRowEchelon(const RationalMatrix& m,
                                 std::vector<std::size_t>* pivots) {
  RationalMatrix a = m;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots != nullptr) *pivots = std::move(piv);
  return a;
}

std::size_t Rank(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  ReducedRowEchelon(m, &pivots);
  return pivots.size();
}

std::vector<Vector> NullspaceBasis(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  const RationalMatrix r = ReducedRowEchelon(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(m.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r(i, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace partid
