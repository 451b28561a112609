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

#include "partid/decisions.hpp"

#include <set>

#include "partid/error.hpp"
#include "partid/lp.hpp"

namespace partid {
namespace {

void RequireStates(const ActionTable& table, std::size_t n) {
  if (table.num_states() != n) {
    Fail(ErrorKind::kDimensionMismatch, "table has " + std::to_string(table.num_states()) +
                                            " state columns, expected " + std::to_string(n));
  }
}

void RequireRule(const Experiment& pi, const ActionTable& table, const DecisionRule& d) {
  if (d.action.size() != pi.num_signals()) {
    Fail(ErrorKind::kIncompleteRule, "rule covers " + std::to_string(d.action.size()) + " of " +
                                         std::to_string(pi.num_signals()) + " signals");
  }
  for (std::size_t a : d.action) {
    if (a >= table.num_actions()) Fail(ErrorKind::kIncompleteRule, "rule action out of range");
  }
}

// min over vertices for utilities, max over vertices for losses.
Rational WorstCase(const CredalSet& c, const Vector& row, bool is_loss) {
  const auto& v = c.vertices();
  Rational worst = Dot(row, v.front());
  for (std::size_t i = 1; i < v.size(); ++i) {
    const Rational e = Dot(row, v[i]);
    if (is_loss ? e > worst : e < worst) worst = e;
  }
  return worst;
}

ActionValue MinimaxLossAction(const CredalSet& c, const LossTable& loss) {
  ActionValue best;
  for (std::size_t a = 0; a < loss.num_actions(); ++a) {
    const Rational worst = WorstCase(c, loss.Row(a), true);
    if (a == 0 || worst < best.value) best = {worst, a};
  }
  return best;
}

}  // namespace

ActionTable::ActionTable(std::vector<std::string> actions, RationalMatrix table)
    : actions_(std::move(actions)), table_(std::move(table)) {
  if (actions_.empty()) Fail(ErrorKind::kEmptyInput, "no actions");
  if (table_.rows() != actions_.size()) {
    Fail(ErrorKind::kDimensionMismatch, "one table row per action is required");
  }
  std::set<std::string> seen;
  for (const auto& a : actions_) {
    if (!seen.insert(a).second) Fail(ErrorKind::kMalformedInput, "duplicate action '" + a + "'");
  }
}

std::size_t ActionTable::ActionIndex(const std::string& name) const {
  for (std::size_t a = 0; a < actions_.size(); ++a) {
    if (actions_[a] == name) return a;
  }
  Fail(ErrorKind::kUnknownLabel, "unknown action '" + name + "'");
}

DecisionRule DecisionRule::FromNames(const Experiment& pi, const ActionTable& table,
                                     const std::map<std::string, std::string>& rule) {
  for (const auto& [signal, action] : rule) (void)pi.SignalIndex(signal);
  DecisionRule d;
  for (const auto& y : pi.signals()) {
    const auto it = rule.find(y);
    if (it == rule.end()) Fail(ErrorKind::kIncompleteRule, "no action for signal '" + y + "'");
    d.action.push_back(table.ActionIndex(it->second));
  }
  return d;
}

ActionValue MaxminValue(const CredalSet& c, const UtilityTable& u) {
  RequireStates(u, c.states().size());
  ActionValue best;
  for (std::size_t a = 0; a < u.num_actions(); ++a) {
    const Rational worst = WorstCase(c, u.Row(a), false);
    if (a == 0 || worst > best.value) best = {worst, a};
  }
  return best;
}

MixedValue MaxminValueMixed(const CredalSet& c, const UtilityTable& u) {
  RequireStates(u, c.states().size());
  const std::size_t m = u.num_actions();
  // Variables sigma_0..sigma_{m-1} >= 0 and a free t in the last slot.
  LinearProgram lp = LinearProgram::Nonnegative(m + 1);
  lp.objective[m] = 1;
  lp.lower_bounds.assign(m + 1, Rational(0));
  lp.lower_bounds[m] = std::nullopt;
  for (const auto& v : c.vertices()) {
    Vector row(m + 1);
    for (std::size_t a = 0; a < m; ++a) row[a] = -Dot(u.Row(a), v);
    row[m] = 1;
    lp.AddInequality(row, Rational(0));
  }
  Vector simplex(m + 1, Rational(1));
  simplex[m] = 0;
  lp.AddEquality(simplex, Rational(1));
  const LPResult r = SolveLP(lp);
  if (!r.optimal()) Fail(ErrorKind::kInvariantViolation, "mixed maxmin program has no optimum");
  return {r.value, Vector(r.solution.begin(), r.solution.begin() + static_cast<long>(m))};
}

Rational ValueV(const Experiment& pi, const CredalSet& c, const UtilityTable& u) {
  RequireStates(u, c.states().size());
  const Vector mu = Marginal(pi, c);
  Rational total = 0;
  for (std::size_t y = 0; y < mu.size(); ++y) {
    if (mu[y] != 0) total += mu[y] * MaxminValue(Update(pi, c, y), u).value;
  }
  return total;
}

Rational ValueW(const Experiment& pi, const CredalSet& c, const UtilityTable& u) {
  RequireStates(u, c.states().size());
  const Vector mu = Marginal(pi, c);
  Rational total = 0;
  for (std::size_t y = 0; y < mu.size(); ++y) {
    if (mu[y] != 0) total += mu[y] * MaxminValueMixed(Update(pi, c, y), u).value;
  }
  return total;
}

bool IsMoreInformative(const Experiment& pi1, const Experiment& pi2) {
  return IsGarblingOf(pi2, pi1).has_value();
}

Vector Risk(const Experiment& pi, const LossTable& loss, const DecisionRule& d) {
  RequireStates(loss, pi.states().size());
  RequireRule(pi, loss, d);
  Vector r(pi.states().size());
  for (std::size_t s = 0; s < r.size(); ++s) {
    for (std::size_t y = 0; y < pi.num_signals(); ++y) r[s] += pi(s, y) * loss(s, d.action[y]);
  }
  return r;
}

Rational BayesRisk(const Vector& p0, const Experiment& pi, const LossTable& loss,
                   const DecisionRule& d) {
  if (p0.size() != pi.states().size()) {
    Fail(ErrorKind::kDimensionMismatch, "prior length differs from the number of states");
  }
  return Dot(p0, Risk(pi, loss, d));
}

Rational GammaObjective(const CredalSet& c, const Experiment& pi, const LossTable& loss,
                        const DecisionRule& d) {
  if (!(c.states() == pi.states())) Fail(ErrorKind::kDimensionMismatch, "state spaces differ");
  return WorstCase(c, Risk(pi, loss, d), true);
}

Rational GammaStarObjective(const CredalSet& c, const Experiment& pi, const LossTable& loss,
                            const DecisionRule& d) {
  RequireStates(loss, c.states().size());
  RequireRule(pi, loss, d);
  const Vector mu = Marginal(pi, c);
  Rational total = 0;
  for (std::size_t y = 0; y < mu.size(); ++y) {
    if (mu[y] != 0) total += mu[y] * WorstCase(Update(pi, c, y), loss.Row(d.action[y]), true);
  }
  return total;
}

RuleValue GammaMinimax(const CredalSet& c, const Experiment& pi, const LossTable& loss,
                       std::size_t cap, Execution exec) {
  if (!(c.states() == pi.states())) Fail(ErrorKind::kDimensionMismatch, "state spaces differ");
  RequireStates(loss, c.states().size());
  const auto& verts = c.vertices();
  kernels::RiskTensor risk(verts.size(), pi.num_signals(), loss.num_actions());
  if (risk.NumRules(cap) > cap) {
    Fail(ErrorKind::kEnumerationTooLarge,
         std::to_string(loss.num_actions()) + "^" + std::to_string(pi.num_signals()) +
             " rules exceed the cap of " + std::to_string(cap));
  }
  for (std::size_t v = 0; v < verts.size(); ++v) {
    for (std::size_t y = 0; y < pi.num_signals(); ++y) {
      for (std::size_t a = 0; a < loss.num_actions(); ++a) {
        Rational& cell = risk(v, y, a);
        for (std::size_t s = 0; s < verts[v].size(); ++s) {
          cell += verts[v][s] * pi(s, y) * loss(s, a);
        }
      }
    }
  }
  const auto best = exec == Execution::kParallel ? kernels::MinimaxRuleParallel(risk)
                                                 : kernels::MinimaxRuleSerial(risk);
  return {DecisionRule{kernels::DecodeRule(best.rule_index, pi.num_signals(), loss.num_actions())},
          best.value};
}

ActionValue ConditionalGammaMinimax(const CredalSet& c, const Experiment& pi,
                                    const LossTable& loss, std::size_t signal) {
  RequireStates(loss, c.states().size());
  return MinimaxLossAction(Update(pi, c, signal), loss);
}

RuleValue GammaStarMinimax(const CredalSet& c, const Experiment& pi, const LossTable& loss) {
  RequireStates(loss, c.states().size());
  const Vector mu = Marginal(pi, c);
  RuleValue out{DecisionRule::Constant(pi.num_signals(), 0), Rational(0)};
  for (std::size_t y = 0; y < mu.size(); ++y) {
    if (mu[y] == 0) continue;
    const ActionValue best = MinimaxLossAction(Update(pi, c, y), loss);
    out.rule.action[y] = best.action;
    out.value += mu[y] * best.value;
  }
  return out;
}

}  // namespace partid
