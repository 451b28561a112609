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

// Persuasion with a maximally partially identified common prior set, solved
// on reduced-form beliefs over the partition cells.

#ifndef PARTID_PERSUASION_HPP_
#define PARTID_PERSUASION_HPP_

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "partid/decisions.hpp"
#include "partid/experiments.hpp"
#include "partid/identification.hpp"

namespace partid {

class PersuasionGame {
 public:
  // Throws NotMaximal when the prior has a non-extreme cell set, and
  // DimensionMismatch when the tables disagree on actions or states.
  PersuasionGame(PartitionedPrior prior, UtilityTable receiver, UtilityTable sender);

  const PartitionedPrior& prior() const { return prior_; }
  const UtilityTable& receiver() const { return receiver_; }
  const UtilityTable& sender() const { return sender_; }
  const std::vector<std::string>& actions() const { return receiver_.actions(); }

 private:
  PartitionedPrior prior_;
  UtilityTable receiver_;
  UtilityTable sender_;
};

// Cell-wise worst-case expected utilities, one row per action and one column
// per cell.
struct ReducedGame {
  Partition cells;
  std::vector<std::string> actions;
  RationalMatrix receiver;
  RationalMatrix sender;
};

ReducedGame Reduce(const PersuasionGame& game);

// Receiver's best reply to tau, breaking ties for the sender and then by
// action order. Throws DimensionMismatch, NotInSimplex.
std::size_t ReceiverAction(const ReducedGame& rg, const Vector& tau);
Rational SenderValue(const ReducedGame& rg, const Vector& tau);

// Vertices of the receiver best-reply regions: points of the cell simplex cut
// out by the indifference hyperplanes and the simplex facets.
std::vector<Vector> CandidateBeliefs(const ReducedGame& rg);

struct SignalDesign {
  std::vector<Vector> support;
  Vector weights;
  Rational value;
  // Some support belief leaves the receiver indifferent between actions, so
  // the value relies on sender-preferred tie-breaking.
  bool boundary_ties = false;
};

// max sum_i mu_i v(tau_i) subject to sum_i mu_i tau_i = tau0 over the
// candidate beliefs. The basic optimum has at most one point per cell; when
// tau0 alone attains it the design is the single point tau0.
SignalDesign ConcavifyAt(const ReducedGame& rg, const Vector& tau0);

struct PersuasionSolution {
  SignalDesign design;
  Experiment experiment;
};

// The optimal design at the prior's reduced form and a consistent experiment
// inducing it.
PersuasionSolution Concavify(const PersuasionGame& game);

// States GP, GA, I; cells {GP, GA} and {I} under full ambiguity; tau0 on
// guilt. Throws OutOfRange unless 0 <= g <= 1 and 0 < tau0 < 1.
PersuasionGame ProsecutorJudge(const Rational& g, const Rational& tau0);

// Two-cell games only; tau is the mass on the first cell.
struct CurveSample {
  Rational tau;
  Rational sender_value;
  Rational concavified;
};
// points >= 2 evenly spaced beliefs. Throws DimensionMismatch.
std::vector<CurveSample> SampleCurve(const ReducedGame& rg, std::size_t points);
void WriteCurveCsv(std::ostream& out, const std::vector<CurveSample>& samples);

struct PlotPanel {
  std::string title;
  ReducedGame game;
};
// Step plot of the sender value (solid, open and filled markers at jumps)
// with its concavification dotted, one panel per game. Throws
// DimensionMismatch.
void WriteStepPlotSvg(std::ostream& out, const std::vector<PlotPanel>& panels);

}  // namespace partid

#endif  // PARTID_PERSUASION_HPP_
