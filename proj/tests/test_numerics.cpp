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

#include <algorithm>

#include "doctest.h"
#include "partid/error.hpp"
#include "partid/lp.hpp"
#include "partid/matrix.hpp"
#include "partid/rational.hpp"
#include "support/random.hpp"

using namespace partid;
using partid::testing::RandomRational;
using partid::testing::Rng;
using partid::testing::UniformInt;

namespace {

Rational Q(long p, long q = 1) { return Rational(p, q); }

// Brute force for two-variable programs  max c.x  s.t.  A x <= b: the optimum
// of a bounded feasible program sits at the intersection of two tight rows.
std::optional<Rational> BruteForce2D(const Vector& c, const std::vector<Vector>& a,
                                     const Vector& b) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const Rational det = a[i][0] * a[j][1] - a[i][1] * a[j][0];
      if (det == 0) continue;
      const Rational x = (b[i] * a[j][1] - a[i][1] * b[j]) / det;
      const Rational y = (a[i][0] * b[j] - b[i] * a[j][0]) / det;
      bool feasible = true;
      for (std::size_t k = 0; k < a.size() && feasible; ++k) {
        feasible = a[k][0] * x + a[k][1] * y <= b[k];
      }
      if (!feasible) continue;
      const Rational v = c[0] * x + c[1] * y;
      if (!best || v > *best) best = v;
    }
  }
  return best;
}

RationalMatrix RandomMatrix(Rng& rng, std::size_t r, std::size_t c) {
  RationalMatrix m(r, c);
  // Low-rank rows show up often enough to exercise dependent pivots.
  const bool low_rank = UniformInt(rng, 0, 2) == 0 && r > 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = (low_rank && i > 0) ? m(0, j) * Rational(static_cast<long>(i) + 1)
                                    : RandomRational(rng, -3, 3, 3);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("parse and print rationals") {
  CHECK(*ParseRational("2/6") == Q(1, 3));
  CHECK(ToString(*ParseRational("2/6")) == "1/3");
  CHECK(ToString(*ParseRational("-4/2")) == "-2");
  CHECK(*ParseRational("0.125") == Q(1, 8));
  CHECK(*ParseRational("-1.5") == Q(-3, 2));
  CHECK(*ParseRational("+7") == Q(7));
  CHECK_FALSE(ParseRational("3/-6"));
  CHECK(*ParseRational("010/4") == Q(5, 2));
  CHECK_FALSE(ParseRational("1/0"));
  CHECK_FALSE(ParseRational(""));
  CHECK_FALSE(ParseRational("abc"));
  CHECK_FALSE(ParseRational("1/2/3"));
  CHECK_FALSE(ParseRational("1e3"));
  CHECK(ToString(Q(0)) == "0");
  CHECK(IsDistribution({Q(1, 3), Q(2, 3)}));
  CHECK_FALSE(IsDistribution({Q(-1, 3), Q(4, 3)}));
  CHECK_FALSE(IsDistribution({Q(1, 3), Q(1, 3)}));
}

TEST_CASE("lp: single bound") {
  LinearProgram lp = LinearProgram::Nonnegative(1);
  lp.objective = {Q(1)};
  lp.AddInequality({Q(1)}, Q(1));
  const auto r = SolveLP(lp);
  REQUIRE(r.optimal());
  CHECK(r.value == 1);
  CHECK(SatisfiesConstraints(lp, r.solution));
}

TEST_CASE("lp: simplex face") {
  LinearProgram lp = LinearProgram::Nonnegative(2);
  lp.objective = {Q(1), Q(1)};
  lp.AddEquality({Q(1), Q(1)}, Q(1));
  const auto r = SolveLP(lp);
  REQUIRE(r.optimal());
  CHECK(r.value == 1);
}

TEST_CASE("lp: ellsberg constraints are feasible") {
  LinearProgram lp = LinearProgram::Nonnegative(3);
  lp.AddEquality({Q(1), Q(0), Q(0)}, Q(1, 3));
  lp.AddEquality({Q(0), Q(1), Q(1)}, Q(2, 3));
  lp.AddEquality({Q(1), Q(1), Q(1)}, Q(1));
  const auto r = SolveLP(lp);
  REQUIRE(r.optimal());
  CHECK(r.solution[0] == Q(1, 3));
  CHECK(r.solution[1] + r.solution[2] == Q(2, 3));
}

TEST_CASE("lp: infeasible, unbounded, free and shifted variables") {
  LinearProgram infeasible = LinearProgram::Nonnegative(1);
  infeasible.AddInequality({Q(1)}, Q(-1));
  CHECK(SolveLP(infeasible).status == LPStatus::kInfeasible);

  LinearProgram unbounded = LinearProgram::Nonnegative(2);
  unbounded.objective = {Q(1), Q(0)};
  unbounded.AddInequality({Q(-1), Q(1)}, Q(1));
  CHECK(SolveLP(unbounded).status == LPStatus::kUnbounded);

  // min x s.t. x >= -5 written as -x <= 5 with x free.
  LinearProgram free = LinearProgram::Nonnegative(1, Sense::kMinimize);
  free.objective = {Q(1)};
  free.lower_bounds = {std::nullopt};
  free.AddInequality({Q(-1)}, Q(5));
  auto r = SolveLP(free);
  REQUIRE(r.optimal());
  CHECK(r.value == -5);

  LinearProgram shifted = LinearProgram::Nonnegative(1, Sense::kMinimize);
  shifted.objective = {Q(2)};
  shifted.lower_bounds = {Q(3, 2)};
  r = SolveLP(shifted);
  REQUIRE(r.optimal());
  CHECK(r.value == 3);
  CHECK(r.solution[0] == Q(3, 2));
}

TEST_CASE("lp: redundant equalities") {
  LinearProgram lp = LinearProgram::Nonnegative(2);
  lp.objective = {Q(1), Q(2)};
  lp.AddEquality({Q(1), Q(1)}, Q(1));
  lp.AddEquality({Q(2), Q(2)}, Q(2));
  const auto r = SolveLP(lp);
  REQUIRE(r.optimal());
  CHECK(r.value == 2);
}

TEST_CASE("lp: malformed programs") {
  LinearProgram lp = LinearProgram::Nonnegative(2);
  lp.eq_matrix = RationalMatrix(1, 3);
  lp.eq_rhs = {Q(0)};
  CHECK_THROWS_AS(SolveLP(lp), Error);
  try {
    SolveLP(lp);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kMalformedProgram);
  }
  LinearProgram bounds = LinearProgram::Nonnegative(2);
  bounds.lower_bounds = {Q(0)};
  CHECK_THROWS_AS(SolveLP(bounds), Error);
}

TEST_CASE("lp: random 2d programs agree with vertex enumeration") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vector> a{{Q(1), Q(0)}, {Q(-1), Q(0)}, {Q(0), Q(1)}, {Q(0), Q(-1)}};
    Vector b{Q(4), Q(4), Q(4), Q(4)};
    const int extra = static_cast<int>(UniformInt(rng, 0, 4));
    for (int k = 0; k < extra; ++k) {
      a.push_back({RandomRational(rng, -3, 3), RandomRational(rng, -3, 3)});
      b.push_back(RandomRational(rng, -2, 4));
    }
    Vector c{RandomRational(rng, -3, 3), RandomRational(rng, -3, 3)};
    LinearProgram lp = LinearProgram::Nonnegative(2);
    lp.objective = c;
    lp.lower_bounds = {std::nullopt, std::nullopt};
    for (std::size_t k = 0; k < a.size(); ++k) lp.AddInequality(a[k], b[k]);
    const auto r = SolveLP(lp);
    const auto oracle = BruteForce2D(c, a, b);
    if (!oracle) {
      CHECK(r.status == LPStatus::kInfeasible);
      continue;
    }
    REQUIRE(r.optimal());
    CHECK(r.value == *oracle);
    CHECK(SatisfiesConstraints(lp, r.solution));
    CHECK(Dot(c, r.solution) == r.value);

    // Permuting the constraint rows leaves status and value unchanged.
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    LinearProgram permuted = LinearProgram::Nonnegative(2);
    permuted.objective = c;
    permuted.lower_bounds = lp.lower_bounds;
    for (std::size_t k : perm) permuted.AddInequality(a[k], b[k]);
    const auto rp = SolveLP(permuted);
    CHECK(rp.status == r.status);
    CHECK(rp.value == r.value);
  }
}

TEST_CASE("nullspace and rank") {
  RationalMatrix zero(1, 3);
  CHECK(NullspaceBasis(zero).size() == 3);
  CHECK(Rank(zero) == 0);
  CHECK(NullspaceBasis(RationalMatrix::Identity(3)).empty());
  CHECK(Rank(RationalMatrix::Identity(3)) == 3);

  const auto m = RationalMatrix::FromRows({{Q(0), Q(1), Q(-1)}});
  CHECK(Rank(m) == 1);
  const auto basis = NullspaceBasis(m);
  REQUIRE(basis.size() == 2);
  for (const auto& x : basis) CHECK(m * x == Vector{Q(0)});
  // Spans (1,0,0) and (0,1,1): both basis vectors lie in that span and are
  // independent.
  const auto span = RationalMatrix::FromRows({basis[0], basis[1], {Q(1), Q(0), Q(0)},
                                              {Q(0), Q(1), Q(1)}});
  CHECK(Rank(span) == 2);
}

TEST_CASE("rank plus nullity equals column count") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(UniformInt(rng, 1, 5));
    const auto c = static_cast<std::size_t>(UniformInt(rng, 1, 6));
    const auto m = RandomMatrix(rng, r, c);
    const auto basis = NullspaceBasis(m);
    CHECK(Rank(m) + basis.size() == c);
    for (const auto& x : basis) CHECK(m * x == Vector(r));
    if (!basis.empty()) {
      CHECK(Rank(RationalMatrix::FromRows(basis)) == basis.size());
    }
  }
}

TEST_CASE("matrix products and append") {
  auto a = RationalMatrix::FromRows({{Q(1), Q(2)}, {Q(3), Q(4)}});
  const auto t = a.Transposed();
  CHECK(t(0, 1) == 3);
  const auto p = a * RationalMatrix::Identity(2);
  CHECK(p == a);
  a.AppendRow({Q(5), Q(6)});
  CHECK(a.rows() == 3);
  CHECK(a.Column(1) == Vector{Q(2), Q(4), Q(6)});
  CHECK_THROWS_AS(a.AppendRow({Q(1)}), Error);
}
