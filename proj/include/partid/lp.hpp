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

#ifndef PARTID_LP_HPP_
#define PARTID_LP_HPP_

#include <optional>
#include <vector>

#include "partid/matrix.hpp"
#include "partid/rational.hpp"

namespace partid {

enum class Sense { kMaximize, kMinimize };

// optimize  objective . x
// s.t.      eq_matrix x  = eq_rhs
//           le_matrix x <= le_rhs
//           x_j >= lower_bounds[j]   (nullopt: x_j is free)
//
// An empty `lower_bounds` means every variable is nonnegative. Either
// constraint block may have zero rows, but its column count must still match
// the number of variables.
struct LinearProgram {
  Sense sense = Sense::kMaximize;
  Vector objective;
  RationalMatrix eq_matrix;
  Vector eq_rhs;
  RationalMatrix le_matrix;
  Vector le_rhs;
  std::vector<std::optional<Rational>> lower_bounds;

  // A program over n nonnegative variables with empty constraint blocks.
  static LinearProgram Nonnegative(std::size_t n,
                                   Sense sense = Sense::kMaximize);
  std::size_t num_variables() const { return objective.size(); }

  void AddEquality(const Vector& row, const Rational& rhs);
  void AddInequality(const Vector& row, const Rational& rhs);
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

struct LPResult {
  LPStatus status = LPStatus::kInfeasible;
  Vector solution;  // set when Optimal
  Rational value;   // set when Optimal

  bool optimal() const { return status == LPStatus::kOptimal; }
};

// Two-phase dense tableau simplex in exact arithmetic with Bland's rule, so
// the result is a deterministic function of the input. Throws
// MalformedProgram on dimension mismatches.
LPResult SolveLP(const LinearProgram& lp);

// True iff the solution satisfies every constraint of `lp` exactly.
bool SatisfiesConstraints(const LinearProgram& lp, const Vector& x);

}  // namespace partid

#endif  // PARTID_LP_HPP_
