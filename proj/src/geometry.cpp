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

#include "partid/geometry.hpp"

#include <algorithm>
#include <set>

#include "partid/error.hpp"
#include "partid/matrix.hpp"

namespace partid {
namespace {

void RequireSameStates(const StateSpace& a, const StateSpace& b) {
  if (!(a == b)) {
    Fail(ErrorKind::kDimensionMismatch, "credal sets live on different state spaces");
  }
}

void RequireLength(const Vector& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    Fail(ErrorKind::kDimensionMismatch,
         std::string(what) + " has " + std::to_string(v.size()) +
             " entries, expected " + std::to_string(n));
  }
}

void RequireEvent(const Event& event, std::size_t n) {
  for (std::size_t s : event) {
    if (s >= n) Fail(ErrorKind::kDimensionMismatch, "event index out of range");
  }
}

void SortUnique(std::vector<Vector>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

bool DisjointSupports(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  const std::size_t n = a.front().size();
  for (std::size_t t = 0; t < n; ++t) {
    bool in_a = false;
    bool in_b = false;
    for (const auto& p : a) in_a = in_a || p[t] != 0;
    for (const auto& p : b) in_b = in_b || p[t] != 0;
    if (in_a && in_b) return false;
  }
  return true;
}

std::vector<char> VertexMask(const std::vector<Vector>& points, Execution exec) {
  return exec == Execution::kParallel ? kernels::ExtremeMaskParallel(points)
                                      : kernels::ExtremeMaskSerial(points);
}

// Tries conv{v_i + s w_i} and conv{v_i - s w_i} for shrinking s until both
// stay in the simplex and average back to c.
std::optional<std::pair<CredalSet, CredalSet>> ScaleDeformation(
    const CredalSet& c, const std::vector<Vector>& w, const Vector& d) {
  const auto& v = c.vertices();
  Rational s = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t t = 0; t < v[i].size(); ++t) {
      if (w[i][t] != 0) s = std::min<Rational>(s, v[i][t] / abs(w[i][t]));
    }
  }
  for (const auto& de : d) {
    if (de != 0) s = std::min<Rational>(s, 1 / abs(de));
  }
  s /= 2;
  for (int attempt = 0; attempt < 64; ++attempt, s /= 2) {
    std::vector<Vector> plus(v.size());
    std::vector<Vector> minus(v.size());
    bool ok = true;
    for (std::size_t i = 0; i < v.size() && ok; ++i) {
      plus[i].resize(v[i].size());
      minus[i].resize(v[i].size());
      for (std::size_t t = 0; t < v[i].size(); ++t) {
        plus[i][t] = v[i][t] + s * w[i][t];
        minus[i][t] = v[i][t] - s * w[i][t];
        if (plus[i][t] < 0 || minus[i][t] < 0) ok = false;
      }
    }
    if (!ok) continue;
    CredalSet q = Canonicalize(c.states(), std::move(plus));
    CredalSet q2 = Canonicalize(c.states(), std::move(minus));
    if (q == q2) continue;
    const Rational half(1, 2);
    if (MinkowskiMix({half, half}, {q, q2}) == c) {
      return std::make_pair(std::move(q), std::move(q2));
    }
  }
  return std::nullopt;
}

}  // namespace

StateSpace::StateSpace(std::vector<std::string> labels) {
  if (labels.empty()) Fail(ErrorKind::kEmptyInput, "state space has no states");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      Fail(ErrorKind::kMalformedInput, "duplicate state label '" + l + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::size_t StateSpace::IndexOf(std::string_view label) const {
  for (std::size_t i = 0; i < labels_->size(); ++i) {
    if ((*labels_)[i] == label) return i;
  }
  Fail(ErrorKind::kUnknownLabel, "unknown state '" + std::string(label) + "'");
}

CredalSet CredalSet::FromCanonical(StateSpace states, std::vector<Vector> vertices) {
#ifndef NDEBUG
  if (vertices.empty() || !std::is_sorted(vertices.begin(), vertices.end())) {
    Fail(ErrorKind::kInvariantViolation, "vertex list is not canonical");
  }
  for (const auto& v : vertices) {
    if (v.size() != states.size() || !IsDistribution(v)) {
      Fail(ErrorKind::kInvariantViolation, "vertex outside the simplex");
    }
  }
#endif
  return CredalSet(std::move(states), std::move(vertices));
}

std::vector<Vector> ExtremePoints(std::vector<Vector> points, Execution exec) {
  SortUnique(points);
  if (points.size() <= 1) return points;
  const auto mask = VertexMask(points, exec);
  std::vector<Vector> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (mask[i]) kept.push_back(std::move(points[i]));
  }
  return kept;
}

CredalSet Canonicalize(const StateSpace& states, std::vector<Vector> points,
                       Execution exec) {
  if (points.empty()) Fail(ErrorKind::kEmptyInput, "no points given");
  for (const auto& p : points) {
    RequireLength(p, states.size(), "point");
    if (!IsDistribution(p)) {
      Fail(ErrorKind::kNotInSimplex, "point is not a probability vector");
    }
  }
  return CredalSet::FromCanonical(states, ExtremePoints(std::move(points), exec));
}

CredalSet SubSimplex(const StateSpace& states, const Event& event) {
  if (event.empty()) Fail(ErrorKind::kEmptyInput, "empty event");
  RequireEvent(event, states.size());
  std::vector<Vector> points;
  for (std::size_t s : event) {
    Vector p(states.size());
    p[s] = 1;
    points.push_back(std::move(p));
  }
  SortUnique(points);
  return CredalSet::FromCanonical(states, std::move(points));
}

CredalSet FullSimplex(const StateSpace& states) {
  Event all(states.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return SubSimplex(states, all);
}

CredalSet PointSet(const StateSpace& states, Vector p) {
  std::vector<Vector> points;
  points.push_back(std::move(p));
  return Canonicalize(states, std::move(points));
}

bool InConvexHull(const std::vector<Vector>& points, const Vector& p) {
  for (const auto& q : points) {
    if (q == p) return true;
  }
  return kernels::HullMembership(points, p);
}

bool Contains(const CredalSet& c, const Vector& p) {
  RequireLength(p, c.states().size(), "point");
  return InConvexHull(c.vertices(), p);
}

bool Equals(const CredalSet& a, const CredalSet& b) {
  RequireSameStates(a.states(), b.states());
  if (a.vertices() == b.vertices()) return true;
  for (const auto& v : a.vertices()) {
    if (!InConvexHull(b.vertices(), v)) return false;
  }
  for (const auto& v : b.vertices()) {
    if (!InConvexHull(a.vertices(), v)) return false;
  }
  return true;
}

std::size_t Dim(const CredalSet& c) {
  const auto& v = c.vertices();
  if (v.size() <= 1) return 0;
  RationalMatrix diff(v.size() - 1, c.states().size());
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t t = 0; t < c.states().size(); ++t) {
      diff(i - 1, t) = v[i][t] - v[0][t];
    }
  }
  return Rank(diff);
}

CredalSet MinkowskiMix(const Vector& weights, const std::vector<CredalSet>& sets,
                       Execution exec) {
  if (sets.empty()) Fail(ErrorKind::kEmptyInput, "nothing to mix");
  if (weights.size() != sets.size()) {
    Fail(ErrorKind::kWeightMismatch, "one weight per set is required");
  }
  if (!IsDistribution(weights)) {
    Fail(ErrorKind::kWeightMismatch, "weights must be nonnegative and sum to 1");
  }
  const StateSpace& states = sets.front().states();
  for (const auto& s : sets) RequireSameStates(states, s.states());

  std::vector<Vector> acc{Vector(states.size())};
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (weights[k] == 0) continue;
    const auto& verts = sets[k].vertices();
    // Sums over disjoint coordinate blocks form a product polytope, whose
    // vertices are exactly the pairwise sums.
    const bool product = acc.size() == 1 || verts.size() == 1 ||
                         DisjointSupports(acc, verts);
    std::vector<Vector> next;
    next.reserve(acc.size() * verts.size());
    for (const auto& a : acc) {
      for (const auto& v : verts) {
        Vector p(a);
        for (std::size_t t = 0; t < p.size(); ++t) p[t] += weights[k] * v[t];
        next.push_back(std::move(p));
      }
    }
    if (product) {
      SortUnique(next);
      acc = std::move(next);
    } else {
      acc = ExtremePoints(std::move(next), exec);
    }
  }
  return CredalSet::FromCanonical(states, std::move(acc));
}

Rational SupportFunction(const CredalSet& c, const Vector& u) {
  RequireLength(u, c.states().size(), "direction");
  const auto& v = c.vertices();
  Rational best = Dot(u, v.front());
  for (std::size_t i = 1; i < v.size(); ++i) {
    Rational x = Dot(u, v[i]);
    if (x > best) best = std::move(x);
  }
  return best;
}

Vector EventMasses(const CredalSet& c, const Event& event) {
  RequireEvent(event, c.states().size());
  Vector masses;
  masses.reserve(c.num_vertices());
  for (const auto& v : c.vertices()) {
    Rational m = 0;
    for (std::size_t s : event) m += v[s];
    masses.push_back(std::move(m));
  }
  return masses;
}

CredalSet ConditionOnEvent(const CredalSet& c, const Event& event) {
  const Vector masses = EventMasses(c, event);
  for (const auto& m : masses) {
    if (m == 0) Fail(ErrorKind::kZeroMassEvent, "event has zero mass at a vertex");
  }
  for (const auto& m : masses) {
    if (m != masses.front()) {
      Fail(ErrorKind::kNonConstantMass,
           "event mass varies across vertices (" + ToString(masses.front()) +
               " vs " + ToString(m) + ")");
    }
  }
  const Rational& mass = masses.front();
  std::vector<Vector> conditioned;
  for (const auto& v : c.vertices()) {
    Vector p(v.size());
    for (std::size_t s : event) p[s] = v[s] / mass;
    conditioned.push_back(std::move(p));
  }
  return Canonicalize(c.states(), std::move(conditioned));
}

Event Support(const CredalSet& c) {
  Event out;
  for (std::size_t t = 0; t < c.states().size(); ++t) {
    for (const auto& v : c.vertices()) {
      if (v[t] != 0) {
        out.push_back(t);
        break;
      }
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> EdgeGraph(
    const std::vector<Vector>& vertices, Execution exec) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) pairs.emplace_back(i, j);
  }
  if (vertices.size() <= 3) return pairs;
  const auto mask = exec == Execution::kParallel
                        ? kernels::EdgeMaskParallel(vertices, pairs)
                        : kernels::EdgeMaskSerial(vertices, pairs);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (mask[k]) edges.push_back(pairs[k]);
  }
  return edges;
}

Extremeness IsExtremeInK(const CredalSet& c, std::size_t vertex_cap) {
  Extremeness out;
  const auto& v = c.vertices();
  const std::size_t m = v.size();
  const std::size_t n = c.states().size();
  if (m > vertex_cap) return out;

  const auto edges = EdgeGraph(v);
  // Unknowns: w_i(t) at i * n + t, then one scale d_e per edge.
  const std::size_t cols = m * n + edges.size();
  std::vector<Vector> rows;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [i, j] = edges[e];
    for (std::size_t t = 0; t < n; ++t) {
      Vector row(cols);
      row[j * n + t] = 1;
      row[i * n + t] = -1;
      row[m * n + e] = v[i][t] - v[j][t];
      rows.push_back(std::move(row));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    Vector sum_row(cols);
    for (std::size_t t = 0; t < n; ++t) {
      sum_row[i * n + t] = 1;
      if (v[i][t] == 0) {
        Vector row(cols);
        row[i * n + t] = 1;
        rows.push_back(std::move(row));
      }
    }
    rows.push_back(std::move(sum_row));
  }
  const auto basis = NullspaceBasis(RationalMatrix::FromRows(rows, cols));
  if (basis.empty()) {
    out.verdict = Extremeness::Verdict::kExtreme;
    return out;
  }
  const Vector& z = basis.front();
  std::vector<Vector> w(m, Vector(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t t = 0; t < n; ++t) w[i][t] = z[i * n + t];
  }
  Vector d(z.begin() + static_cast<std::ptrdiff_t>(m * n), z.end());
  if (auto witness = ScaleDeformation(c, w, d)) {
    out.verdict = Extremeness::Verdict::kNotExtreme;
    out.witness = std::move(witness);
  }
  return out;
}

}  // namespace partid
