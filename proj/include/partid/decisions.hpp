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

// Maxmin valuation of actions and experiments, and Gamma-minimax rules.
//
// Suprema over a credal set of linear objectives are taken over its vertices.
// Ties always go to the earliest action, or the lexicographically smallest
// rule.

#ifndef PARTID_DECISIONS_HPP_
#define PARTID_DECISIONS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "partid/experiments.hpp"
#include "partid/geometry.hpp"
#include "partid/kernels.hpp"
#include "partid/matrix.hpp"

namespace partid {

// One row per action, one column per state.
class ActionTable {
 public:
  // Throws EmptyInput, DimensionMismatch, MalformedInput (duplicate action).
  ActionTable(std::vector<std::string> actions, RationalMatrix table);

  const std::vector<std::string>& actions() const { return actions_; }
  std::size_t num_actions() const { return actions_.size(); }
  std::size_t num_states() const { return table_.cols(); }
  const RationalMatrix& table() const { return table_; }
  Vector Row(std::size_t action) const { return table_.Row(action); }
  // Throws UnknownLabel.
  std::size_t ActionIndex(const std::string& name) const;

 protected:
  std::vector<std::string> actions_;
  RationalMatrix table_;
};

// u(a, s).
class UtilityTable : public ActionTable {
 public:
  using ActionTable::ActionTable;
  const Rational& operator()(std::size_t action, std::size_t state) const {
    return table_(action, state);
  }
};

// L(s, a), stored action-major like UtilityTable.
class LossTable : public ActionTable {
 public:
  using ActionTable::ActionTable;
  const Rational& operator()(std::size_t state, std::size_t action) const {
    return table_(action, state);
  }
};

// action[y] for every signal y of the experiment.
struct DecisionRule {
  std::vector<std::size_t> action;

  // Throws IncompleteRule if a signal is unmapped, UnknownLabel for names
  // outside the experiment or the table.
  static DecisionRule FromNames(const Experiment& pi, const ActionTable& table,
                                const std::map<std::string, std::string>& rule);
  static DecisionRule Constant(std::size_t signals, std::size_t action) {
    return DecisionRule{std::vector<std::size_t>(signals, action)};
  }
  bool operator==(const DecisionRule& other) const { return action == other.action; }
};

struct ActionValue {
  Rational value;
  std::size_t action = 0;
};

struct MixedValue {
  Rational value;
  Vector sigma;
};

struct RuleValue {
  DecisionRule rule;
  Rational value;
};

inline constexpr std::size_t kDefaultRuleCap = 4096;

// max_a min_{p in c} E_p u(a, .). Throws DimensionMismatch.
ActionValue MaxminValue(const CredalSet& c, const UtilityTable& u);

// max over mixed actions sigma of min_{p in c} sum_a sigma(a) E_p u(a, .),
// solved as a zero-sum LP. Throws DimensionMismatch.
MixedValue MaxminValueMixed(const CredalSet& c, const UtilityTable& u);

// E_mu of the posterior maxmin value. Throws InconsistentExperiment.
Rational ValueV(const Experiment& pi, const CredalSet& c, const UtilityTable& u);
// As ValueV with mixed actions after each signal.
Rational ValueW(const Experiment& pi, const CredalSet& c, const UtilityTable& u);

// pi2 is a garbling of pi1. Throws DimensionMismatch.
bool IsMoreInformative(const Experiment& pi1, const Experiment& pi2);

// R(s) = sum_y pi(y|s) L(s, d(y)). Throws IncompleteRule, DimensionMismatch.
Vector Risk(const Experiment& pi, const LossTable& loss, const DecisionRule& d);
// sum_s p0(s) R(s). Throws DimensionMismatch.
Rational BayesRisk(const Vector& p0, const Experiment& pi, const LossTable& loss,
                   const DecisionRule& d);

// max over the vertices of c of the Bayes risk of d.
Rational GammaObjective(const CredalSet& c, const Experiment& pi, const LossTable& loss,
                        const DecisionRule& d);
// sum_y mu(y) max_{p in P_y} E_p L(., d(y)); signals of zero mass contribute
// nothing. Throws InconsistentExperiment.
Rational GammaStarObjective(const CredalSet& c, const Experiment& pi, const LossTable& loss,
                            const DecisionRule& d);

// The pure rule minimizing GammaObjective, by exhaustive enumeration. Throws
// EnumerationTooLarge when |A|^|Y| exceeds `cap`.
RuleValue GammaMinimax(const CredalSet& c, const Experiment& pi, const LossTable& loss,
                       std::size_t cap = kDefaultRuleCap,
                       Execution exec = Execution::kParallel);

// min_a max_{p in P_y} E_p L(., a). Throws ZeroProbabilitySignal.
ActionValue ConditionalGammaMinimax(const CredalSet& c, const Experiment& pi,
                                    const LossTable& loss, std::size_t signal);

// The rule minimizing GammaStarObjective, which separates across signals.
// Zero-mass signals get the first action. Throws InconsistentExperiment.
RuleValue GammaStarMinimax(const CredalSet& c, const Experiment& pi, const LossTable& loss);

}  // namespace partid

#endif  // PARTID_DECISIONS_HPP_
