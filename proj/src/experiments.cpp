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

#include "partid/experiments.hpp"

#include <set>

#include "partid/error.hpp"
#include "partid/lp.hpp"

namespace partid {
namespace {

void RequireDistinct(const std::vector<std::string>& names, const char* what) {
  if (names.empty()) Fail(ErrorKind::kMalformedInput, std::string("no ") + what);
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      Fail(ErrorKind::kMalformedInput, std::string("duplicate ") + what + " '" + n + "'");
    }
  }
}

void RequireStochastic(const RationalMatrix& m, const char* what) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!IsDistribution(m.Row(r))) {
      Fail(ErrorKind::kNotInSimplex,
           std::string(what) + " row " + std::to_string(r) + " is not a distribution");
    }
  }
}

void RequireSameStates(const StateSpace& a, const StateSpace& b) {
  if (!(a == b)) Fail(ErrorKind::kDimensionMismatch, "state spaces differ");
}

}  // namespace

Experiment::Experiment(StateSpace states, std::vector<std::string> signals,
                       RationalMatrix rows)
    : states_(std::move(states)), signals_(std::move(signals)), rows_(std::move(rows)) {
  RequireDistinct(signals_, "signal");
  if (rows_.rows() != states_.size() || rows_.cols() != signals_.size()) {
    Fail(ErrorKind::kDimensionMismatch,
         "likelihood matrix must be |states| x |signals|");
  }
  RequireStochastic(rows_, "likelihood");
}

std::size_t Experiment::SignalIndex(std::string_view name) const {
  for (std::size_t y = 0; y < signals_.size(); ++y) {
    if (signals_[y] == name) return y;
  }
  Fail(ErrorKind::kUnknownLabel, "unknown signal '" + std::string(name) + "'");
}

bool Experiment::is_trivial() const {
  for (std::size_t s = 1; s < rows_.rows(); ++s) {
    for (std::size_t y = 0; y < rows_.cols(); ++y) {
      if (rows_(s, y) != rows_(0, y)) return false;
    }
  }
  return true;
}

Kernel::Kernel(std::vector<std::string> from, std::vector<std::string> to, RationalMatrix k)
    : from_signals(std::move(from)), to_signals(std::move(to)), rows(std::move(k)) {
  RequireDistinct(from_signals, "source signal");
  RequireDistinct(to_signals, "target signal");
  if (rows.rows() != from_signals.size() || rows.cols() != to_signals.size()) {
    Fail(ErrorKind::kDimensionMismatch, "kernel must be |from| x |to|");
  }
  RequireStochastic(rows, "kernel");
}

bool IsConsistent(const Experiment& pi, const CredalSet& c) {
  RequireSameStates(pi.states(), c.states());
  const auto& v = c.vertices();
  for (std::size_t y = 0; y < pi.num_signals(); ++y) {
    const Vector l = pi.Likelihood(y);
    const Rational base = Dot(l, v.front());
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (Dot(l, v[i]) != base) return false;
    }
  }
  return true;
}

bool IsMeasurable(const Experiment& pi, const Partition& partition) {
  if (partition.num_states() != pi.states().size()) {
    Fail(ErrorKind::kDimensionMismatch, "partition and experiment disagree on |states|");
  }
  for (const auto& cell : partition.cells()) {
    for (std::size_t s : cell) {
      if (pi.rows().Row(s) != pi.rows().Row(cell.front())) return false;
    }
  }
  return true;
}

Vector Marginal(const Experiment& pi, const CredalSet& c) {
  if (!IsConsistent(pi, c)) {
    Fail(ErrorKind::kInconsistentExperiment,
         "signal distribution depends on the prior, so there is no common marginal");
  }
  Vector mu(pi.num_signals());
  const Vector& v = c.vertices().front();
  for (std::size_t y = 0; y < mu.size(); ++y) mu[y] = Dot(pi.Likelihood(y), v);
  return mu;
}

CredalSet Update(const Experiment& pi, const CredalSet& c, std::size_t signal) {
  RequireSameStates(pi.states(), c.states());
  if (signal >= pi.num_signals()) Fail(ErrorKind::kUnknownLabel, "signal index out of range");
  const Vector l = pi.Likelihood(signal);
  std::vector<Vector> posteriors;
  for (const auto& v : c.vertices()) {
    const Rational mass = Dot(l, v);
    if (mass == 0) continue;
    Vector p(v.size());
    for (std::size_t t = 0; t < p.size(); ++t) p[t] = l[t] * v[t] / mass;
    posteriors.push_back(std::move(p));
  }
  if (posteriors.empty()) {
    Fail(ErrorKind::kZeroProbabilitySignal,
         "signal '" + pi.signals()[signal] + "' has probability 0 under every prior");
  }
  return Canonicalize(c.states(), std::move(posteriors));
}

ReducedForm ReducedFormPosterior(const Experiment& pi, const PartitionedPrior& pp,
                                 std::size_t signal) {
  if (!IsConsistent(pi, pp.assembled)) {
    Fail(ErrorKind::kInconsistentExperiment, "experiment is not consistent with the prior");
  }
  if (signal >= pi.num_signals()) Fail(ErrorKind::kUnknownLabel, "signal index out of range");
  const Vector l = pi.Likelihood(signal);
  const std::size_t cells = pp.reduced.partition.size();
  // Consistency makes pi(y|.) integrate to the same value over every measure
  // in a cell set, so any vertex gives the cell likelihood.
  Vector joint(cells);
  Rational mu = 0;
  for (std::size_t k = 0; k < cells; ++k) {
    joint[k] = pp.reduced.tau[k] * Dot(l, pp.cell_sets[k].vertices().front());
    mu += joint[k];
  }
  if (mu == 0) {
    Fail(ErrorKind::kZeroProbabilitySignal,
         "signal '" + pi.signals()[signal] + "' has probability 0");
  }
  for (auto& x : joint) x /= mu;
  ReducedForm posterior(pp.reduced.partition, std::move(joint));
  if (!(MinkowskiMix(posterior.tau, pp.cell_sets) == Update(pi, pp.assembled, signal))) {
    Fail(ErrorKind::kInvariantViolation,
         "reduced-form posterior does not reproduce the prior-by-prior update");
  }
  return posterior;
}

Experiment ConstructConsistent(const CredalSet& c) {
  const std::size_t n = c.states().size();
  if (Dim(c) + 1 >= n) {
    Fail(ErrorKind::kFullDimensional,
         "the prior set is full-dimensional, so only trivial experiments are consistent");
  }
  const auto& v = c.vertices();
  RationalMatrix diff(0, n);
  for (std::size_t i = 1; i < v.size(); ++i) {
    Vector d(n);
    for (std::size_t t = 0; t < n; ++t) d[t] = v[i][t] - v[0][t];
    diff.AppendRow(d);
  }
  Vector e;
  for (const auto& x : NullspaceBasis(diff)) {
    const Rational mean = Sum(x) / Rational(static_cast<long>(n));
    Vector centred(n);
    bool constant = true;
    for (std::size_t t = 0; t < n; ++t) {
      centred[t] = x[t] - mean;
      constant = constant && centred[t] == 0;
    }
    if (!constant) {
      e = std::move(centred);
      break;
    }
  }
  if (e.empty()) {
    Fail(ErrorKind::kInvariantViolation, "no non-constant vector orthogonal to the set");
  }
  Rational peak = 0;
  for (const auto& x : e) peak = std::max<Rational>(peak, abs(x));
  const Rational eps = 1 / (2 * peak);
  RationalMatrix rows(n, 2);
  for (std::size_t t = 0; t < n; ++t) {
    rows(t, 0) = Rational(1, 2) + eps * e[t];
    rows(t, 1) = Rational(1, 2) - eps * e[t];
  }
  return Experiment(c.states(), {"y1", "y2"}, std::move(rows));
}

Experiment PartitionRevealing(const StateSpace& states, const Partition& partition) {
  if (partition.num_states() != states.size()) {
    Fail(ErrorKind::kDimensionMismatch, "partition and state space disagree on |states|");
  }
  std::vector<std::string> signals;
  RationalMatrix rows(states.size(), partition.size());
  for (std::size_t k = 0; k < partition.size(); ++k) {
    std::string name = "{";
    for (std::size_t s : partition.cell(k)) {
      if (name.size() > 1) name += ",";
      name += states.label(s);
      rows(s, k) = 1;
    }
    signals.push_back(name + "}");
  }
  return Experiment(states, std::move(signals), std::move(rows));
}

Experiment Garble(const Experiment& pi1, const Kernel& k) {
  if (k.from_signals != pi1.signals()) {
    Fail(ErrorKind::kSignalMismatch, "kernel source signals differ from the experiment's");
  }
  return Experiment(pi1.states(), k.to_signals, pi1.rows() * k.rows);
}

std::optional<Kernel> IsGarblingOf(const Experiment& pi2, const Experiment& pi1) {
  RequireSameStates(pi1.states(), pi2.states());
  const std::size_t y1 = pi1.num_signals();
  const std::size_t y2 = pi2.num_signals();
  const std::size_t n = pi1.states().size();
  // Variable k(b|a) at a * y2 + b.
  LinearProgram lp = LinearProgram::Nonnegative(y1 * y2);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t b = 0; b < y2; ++b) {
      Vector row(y1 * y2);
      for (std::size_t a = 0; a < y1; ++a) row[a * y2 + b] = pi1(s, a);
      lp.AddEquality(row, pi2(s, b));
    }
  }
  for (std::size_t a = 0; a < y1; ++a) {
    Vector row(y1 * y2);
    for (std::size_t b = 0; b < y2; ++b) row[a * y2 + b] = 1;
    lp.AddEquality(row, Rational(1));
  }
  const LPResult r = SolveLP(lp);
  if (!r.optimal()) return std::nullopt;
  RationalMatrix k(y1, y2);
  for (std::size_t a = 0; a < y1; ++a) {
    for (std::size_t b = 0; b < y2; ++b) k(a, b) = r.solution[a * y2 + b];
  }
  return Kernel(pi1.signals(), pi2.signals(), std::move(k));
}

}  // namespace partid
