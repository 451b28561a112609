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

#ifndef PARTID_EXPERIMENTS_HPP_
#define PARTID_EXPERIMENTS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partid/geometry.hpp"
#include "partid/identification.hpp"
#include "partid/matrix.hpp"

namespace partid {

// Likelihood pi(y | state): one row per state, one column per signal.
class Experiment {
 public:
  // Throws DimensionMismatch, NotInSimplex (a row is not a distribution),
  // MalformedInput (duplicate or missing signal names).
  Experiment(StateSpace states, std::vector<std::string> signals, RationalMatrix rows);

  const StateSpace& states() const { return states_; }
  const std::vector<std::string>& signals() const { return signals_; }
  std::size_t num_signals() const { return signals_.size(); }
  const RationalMatrix& rows() const { return rows_; }
  const Rational& operator()(std::size_t state, std::size_t signal) const {
    return rows_(state, signal);
  }
  // pi(y | .) as a vector over states.
  Vector Likelihood(std::size_t signal) const { return rows_.Column(signal); }
  // Throws UnknownLabel.
  std::size_t SignalIndex(std::string_view name) const;

  // Rows constant across states.
  bool is_trivial() const;

  bool operator==(const Experiment& other) const {
    return states_ == other.states_ && signals_ == other.signals_ && rows_ == other.rows_;
  }

 private:
  StateSpace states_;
  std::vector<std::string> signals_;
  RationalMatrix rows_;
};

// Markov kernel k(to | from): one row per source signal.
struct Kernel {
  std::vector<std::string> from_signals;
  std::vector<std::string> to_signals;
  RationalMatrix rows;

  // Throws DimensionMismatch, NotInSimplex.
  Kernel(std::vector<std::string> from, std::vector<std::string> to, RationalMatrix k);
};

// pi(y|.) . (v - v_1) = 0 for every signal and vertex. Throws DimensionMismatch.
bool IsConsistent(const Experiment& pi, const CredalSet& c);

// Rows agree within every cell.
bool IsMeasurable(const Experiment& pi, const Partition& partition);

// Prior-predictive signal distribution. Throws InconsistentExperiment.
Vector Marginal(const Experiment& pi, const CredalSet& c);

// Vertex-wise Bayes update; vertices that give the signal no mass are
// skipped. Throws ZeroProbabilitySignal when every vertex does.
CredalSet Update(const Experiment& pi, const CredalSet& c, std::size_t signal);

// tau_y over the prior's partition. Checks that mixing the cell sets with
// tau_y reproduces Update(pi, pp.assembled, y). Throws InconsistentExperiment,
// ZeroProbabilitySignal.
ReducedForm ReducedFormPosterior(const Experiment& pi, const PartitionedPrior& pp,
                                 std::size_t signal);

// Two signals y1, y2 with pi(y1|.) = 1/2 + eps e and pi(y2|.) = 1/2 - eps e,
// where e is the first nullspace vector of the vertex differences that is not
// a multiple of the ones vector, minus its mean, and eps = 1/(2 max|e|).
// Throws FullDimensional.
Experiment ConstructConsistent(const CredalSet& c);

// pi(phi | s) = 1 iff s in phi. Signals are named like "{G,B}".
Experiment PartitionRevealing(const StateSpace& states, const Partition& partition);

// pi2(y2|s) = sum_y1 k(y2|y1) pi1(y1|s). Throws SignalMismatch.
Experiment Garble(const Experiment& pi1, const Kernel& k);

// A kernel k with Garble(pi1, k) == pi2, if one exists (LP feasibility).
// Throws DimensionMismatch when the state spaces differ.
std::optional<Kernel> IsGarblingOf(const Experiment& pi2, const Experiment& pi1);

}  // namespace partid

#endif  // PARTID_EXPERIMENTS_HPP_
