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

#ifndef PARTID_MATRIX_HPP_
#define PARTID_MATRIX_HPP_

#include <cstddef>
#include <vector>

#include "partid/rational.hpp"

namespace partid {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  // Builds from a list of equally sized rows. `cols` is only consulted when
  // `rows` is empty, so a 0 x n matrix can still be expressed.
  static RationalMatrix FromRows(const std::vector<Vector>& rows,
                                 std::size_t cols = 0);
  static RationalMatrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vector Row(std::size_t r) const;
  Vector Column(std::size_t c) const;
  std::vector<Vector> RowVectors() const;
  // Fixes the column count on an empty matrix.
  void AppendRow(const Vector& row);

  RationalMatrix Transposed() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  Vector operator*(const Vector& x) const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Reduced row echelon form; `pivots` receives the pivot column of each
// nonzero row, in order.
RationalMatrix ReducedRowEchelon(const RationalMatrix& m,
                                 std::vector<std::size_t>* pivots);

std::size_t Rank(const RationalMatrix& m);

// Basis of {x : m x = 0}, one vector per free column of the reduced echelon
// form (free entry 1, other free entries 0).
std::vector<Vector> NullspaceBasis(const RationalMatrix& m);

}  // namespace partid

#endif  // PARTID_MATRIX_HPP_
