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

// Credal sets: closed convex sets of probability vectors over a finite state
// space, stored by their extreme points in exact arithmetic.

#ifndef PARTID_GEOMETRY_HPP_
#define PARTID_GEOMETRY_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partid/kernels.hpp"
#include "partid/rational.hpp"

namespace partid {

// Ordered, distinct state labels. Copies share the label storage.
class StateSpace {
 public:
  explicit StateSpace(std::vector<std::string> labels);

  std::size_t size() const { return labels_->size(); }
  const std::string& label(std::size_t i) const { return (*labels_)[i]; }
  const std::vector<std::string>& labels() const { return *labels_; }
  // Throws UnknownLabel.
  std::size_t IndexOf(std::string_view label) const;

  bool operator==(const StateSpace& other) const {
    return labels_ == other.labels_ || *labels_ == *other.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

// A set of states, as sorted distinct indices.
using Event = std::vector<std::size_t>;

class CredalSet {
 public:
  const StateSpace& states() const { return states_; }
  // Extreme points, lexicographically sorted, each a probability vector.
  const std::vector<Vector>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  bool is_singleton() const { return vertices_.size() == 1; }

  // Equal canonical vertex lists over the same states. Because the canonical
  // form is unique this coincides with set equality.
  bool operator==(const CredalSet& other) const {
    return states_ == other.states_ && vertices_ == other.vertices_;
  }

  // Vertex list already known to be canonical (extreme, sorted, in the
  // simplex). Only checked in debug builds.
  static CredalSet FromCanonical(StateSpace states, std::vector<Vector> vertices);

 private:
  CredalSet(StateSpace states, std::vector<Vector> vertices)
      : states_(std::move(states)), vertices_(std::move(vertices)) {}

  StateSpace states_;
  std::vector<Vector> vertices_;
};

// Convex hull of `points` in canonical form. Throws EmptyInput,
// DimensionMismatch, NotInSimplex.
CredalSet Canonicalize(const StateSpace& states, std::vector<Vector> points,
                       Execution exec = Execution::kParallel);

// Delta(event): the sub-simplex of measures supported on `event`.
CredalSet SubSimplex(const StateSpace& states, const Event& event);
CredalSet FullSimplex(const StateSpace& states);
CredalSet PointSet(const StateSpace& states, Vector p);

// Extreme points of an arbitrary finite point set (not necessarily in the
// simplex), deduplicated and lexicographically sorted.
std::vector<Vector> ExtremePoints(std::vector<Vector> points,
                                  Execution exec = Execution::kParallel);

// True iff p is a convex combination of `points`.
bool InConvexHull(const std::vector<Vector>& points, const Vector& p);

bool Contains(const CredalSet& c, const Vector& p);
// Mutual vertex containment. Throws DimensionMismatch across state spaces.
bool Equals(const CredalSet& a, const CredalSet& b);
// Affine dimension.
std::size_t Dim(const CredalSet& c);

// sum_i weights[i] * sets[i] (Minkowski). Zero-weight terms are skipped.
// Throws WeightMismatch, DimensionMismatch.
CredalSet MinkowskiMix(const Vector& weights, const std::vector<CredalSet>& sets,
                       Execution exec = Execution::kParallel);

// max over the set of u . p.
Rational SupportFunction(const CredalSet& c, const Vector& u);

// Total mass each vertex puts on `event`.
Vector EventMasses(const CredalSet& c, const Event& event);
// Set of conditionals p(. | event). The event mass must be positive and the
// same at every vertex. Throws ZeroMassEvent, NonConstantMass.
CredalSet ConditionOnEvent(const CredalSet& c, const Event& event);

// States some vertex gives positive mass.
Event Support(const CredalSet& c);

// Extremeness of a credal set in the space of closed convex subsets of the
// simplex: c is extreme when c = Q/2 + Q'/2 with Q, Q' inside the simplex
// forces Q = Q' = c.
//
// Decided by the space of first-order deformations of c that keep every edge
// direction and every vertex on the simplex faces it already touches. c is
// extreme iff that space is trivial; otherwise a deformation scaled small
// enough yields the witness pair, which is verified exactly before return.
// Unknown is reserved for inputs with more vertices than `vertex_cap`.
struct Extremeness {
  enum class Verdict { kExtreme, kNotExtreme, kUnknown };
  Verdict verdict = Verdict::kUnknown;
  // For NotExtreme: Q != Q' with Q/2 + Q'/2 == c.
  std::optional<std::pair<CredalSet, CredalSet>> witness;
};

Extremeness IsExtremeInK(const CredalSet& c, std::size_t vertex_cap = 48);

// Index sets of vertex pairs forming edges of conv(vertices).
std::vector<std::pair<std::size_t, std::size_t>> EdgeGraph(
    const std::vector<Vector>& vertices, Execution exec = Execution::kParallel);

}  // namespace partid

#endif  // PARTID_GEOMETRY_HPP_
