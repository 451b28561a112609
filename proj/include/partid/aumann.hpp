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

// Distributions over posterior credal sets and the experiments inducing them.

#ifndef PARTID_AUMANN_HPP_
#define PARTID_AUMANN_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "partid/experiments.hpp"
#include "partid/geometry.hpp"
#include "partid/identification.hpp"

namespace partid {

class InformationStructure {
 public:
  // Throws EmptyInput, DimensionMismatch, WeightMismatch (weights not
  // positive or not summing to 1), MalformedInput (duplicate signal names).
  InformationStructure(std::vector<std::string> signals, Vector weights,
                       std::vector<CredalSet> posteriors);
  // Signals named y0, y1, ...
  InformationStructure(const Vector& weights, const std::vector<CredalSet>& posteriors);

  const StateSpace& states() const { return posteriors_.front().states(); }
  std::size_t size() const { return weights_.size(); }
  const std::vector<std::string>& signals() const { return signals_; }
  const Vector& weights() const { return weights_; }
  const std::vector<CredalSet>& posteriors() const { return posteriors_; }

  // Same signal order, weights and posterior sets.
  bool operator==(const InformationStructure& other) const {
    return weights_ == other.weights_ && posteriors_ == other.posteriors_;
  }

 private:
  std::vector<std::string> signals_;
  Vector weights_;
  std::vector<CredalSet> posteriors_;
};

// A set of joint pmfs on states x signals; entry (s, y) of a vertex sits at
// s * signals.size() + y.
struct JointCredalSet {
  StateSpace states;
  std::vector<std::string> signals;
  std::vector<Vector> vertices;

  std::size_t index(std::size_t state, std::size_t signal) const {
    return state * signals.size() + signal;
  }
};

// Marginal weights with zero-mass signals dropped, and the prior-by-prior
// posterior for each remaining signal. Throws InconsistentExperiment.
InformationStructure InducedStructure(const Experiment& pi, const CredalSet& c);

// sum_y mu(y) P_y == c. Throws DimensionMismatch.
bool IsAumannPlausible(const InformationStructure& is, const CredalSet& c);

// tau_y for every posterior, with sum_y mu(y) tau_y = tau and each
// P_y = sum_phi tau_y(phi) P_phi. Throws NotPlausible, NonConstantCellMass,
// CellMismatch.
std::vector<ReducedForm> DecomposeReducedForm(const InformationStructure& is,
                                              const PartitionedPrior& pp);

// The cell-measurable experiment pi(y|phi) = mu(y) tau_y(phi) / tau(phi),
// checked to induce `is`. Plausibility and the decomposition are checked
// before maximality, so a split that no experiment can induce reports
// CellMismatch. Throws NotPlausible, CellMismatch, NotMaximal.
Experiment ConstructExperiment(const InformationStructure& is, const PartitionedPrior& pp);

// {v(s) pi(y|s)} over the vertices v of c.
JointCredalSet JointExAnte(const CredalSet& c, const Experiment& pi);

// {mu(y) p_y(s)} over all selections p_y in P_y. The signal blocks use
// disjoint coordinates, so every selection of vertices is a vertex. Throws
// SupportTooLarge past `vertex_cap` selections.
JointCredalSet JointInterim(const InformationStructure& is, std::size_t vertex_cap = 4096);

CredalSet StateMarginal(const JointCredalSet& joint);
// Extreme points of the signal marginals.
std::vector<Vector> SignalMarginal(const JointCredalSet& joint);

}  // namespace partid

#endif  // PARTID_AUMANN_HPP_
