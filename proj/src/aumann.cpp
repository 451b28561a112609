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

#include "partid/aumann.hpp"

#include <algorithm>
#include <set>

#include "partid/error.hpp"

namespace partid {
namespace {

std::vector<std::string> DefaultNames(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t y = 0; y < n; ++y) names.push_back("y" + std::to_string(y));
  return names;
}

}  // namespace

InformationStructure::InformationStructure(std::vector<std::string> signals, Vector weights,
                                           std::vector<CredalSet> posteriors)
    : signals_(std::move(signals)), weights_(std::move(weights)),
      posteriors_(std::move(posteriors)) {
  if (posteriors_.empty()) Fail(ErrorKind::kEmptyInput, "information structure has no signals");
  if (weights_.size() != posteriors_.size() || signals_.size() != posteriors_.size()) {
    Fail(ErrorKind::kWeightMismatch, "one weight and one name per posterior are required");
  }
  for (const auto& w : weights_) {
    if (w <= 0) Fail(ErrorKind::kWeightMismatch, "weights must be strictly positive");
  }
  if (Sum(weights_) != 1) Fail(ErrorKind::kWeightMismatch, "weights must sum to 1");
  for (const auto& p : posteriors_) {
    if (!(p.states() == posteriors_.front().states())) {
      Fail(ErrorKind::kDimensionMismatch, "posteriors live on different state spaces");
    }
  }
  std::set<std::string> seen;
  for (const auto& s : signals_) {
    if (!seen.insert(s).second) Fail(ErrorKind::kMalformedInput, "duplicate signal '" + s + "'");
  }
}

InformationStructure::InformationStructure(const Vector& weights,
                                           const std::vector<CredalSet>& posteriors)
    : InformationStructure(DefaultNames(posteriors.size()), weights, posteriors) {}

InformationStructure InducedStructure(const Experiment& pi, const CredalSet& c) {
  const Vector mu = Marginal(pi, c);
  std::vector<std::string> names;
  Vector weights;
  std::vector<CredalSet> posteriors;
  for (std::size_t y = 0; y < mu.size(); ++y) {
    if (mu[y] == 0) continue;
    names.push_back(pi.signals()[y]);
    weights.push_back(mu[y]);
    posteriors.push_back(Update(pi, c, y));
  }
  return InformationStructure(std::move(names), std::move(weights), std::move(posteriors));
}

bool IsAumannPlausible(const InformationStructure& is, const CredalSet& c) {
  if (!(is.states() == c.states())) {
    Fail(ErrorKind::kDimensionMismatch, "structure and prior live on different state spaces");
  }
  return Equals(MinkowskiMix(is.weights(), is.posteriors()), c);
}

std::vector<ReducedForm> DecomposeReducedForm(const InformationStructure& is,
                                              const PartitionedPrior& pp) {
  if (!IsAumannPlausible(is, pp.assembled)) {
    Fail(ErrorKind::kNotPlausible, "the posteriors do not average to the prior set");
  }
  const Partition& part = pp.reduced.partition;
  std::vector<ReducedForm> out;
  Vector average(part.size());
  for (std::size_t y = 0; y < is.size(); ++y) {
    ReducedForm tau_y = CompatibilityTau(is.posteriors()[y], part);
    for (std::size_t k = 0; k < part.size(); ++k) average[k] += is.weights()[y] * tau_y.tau[k];
    if (!(MinkowskiMix(tau_y.tau, pp.cell_sets) == is.posteriors()[y])) {
      Fail(ErrorKind::kCellMismatch,
           "posterior for signal '" + is.signals()[y] +
               "' is not a mixture of the prior's cell sets");
    }
    out.push_back(std::move(tau_y));
  }
  if (average != pp.reduced.tau) {
    Fail(ErrorKind::kInvariantViolation, "reduced-form posteriors do not average to tau");
  }
  return out;
}

Experiment ConstructExperiment(const InformationStructure& is, const PartitionedPrior& pp) {
  const auto taus = DecomposeReducedForm(is, pp);
  const Maximality m = CheckMaximal(pp);
  if (m.verdict == Maximality::Verdict::kNo) {
    Fail(ErrorKind::kNotMaximal,
         "cell " + std::to_string(*m.witness_cell) + " set is not extreme");
  }
  const Partition& part = pp.reduced.partition;
  RationalMatrix rows(part.num_states(), is.size());
  for (std::size_t s = 0; s < part.num_states(); ++s) {
    const std::size_t k = part.cell_of(s);
    for (std::size_t y = 0; y < is.size(); ++y) {
      rows(s, y) = is.weights()[y] * taus[y].tau[k] / pp.reduced.tau[k];
    }
  }
  Experiment pi(pp.assembled.states(), is.signals(), std::move(rows));
  if (!(InducedStructure(pi, pp.assembled) == is)) {
    Fail(ErrorKind::kInvariantViolation, "reconstructed experiment does not induce the structure");
  }
  return pi;
}

JointCredalSet JointExAnte(const CredalSet& c, const Experiment& pi) {
  if (!(c.states() == pi.states())) {
    Fail(ErrorKind::kDimensionMismatch, "prior and experiment live on different state spaces");
  }
  JointCredalSet joint{c.states(), pi.signals(), {}};
  const std::size_t m = pi.num_signals();
  // v -> v(s) pi(y|s) is linear and injective, so vertices map to vertices.
  for (const auto& v : c.vertices()) {
    Vector g(v.size() * m);
    for (std::size_t s = 0; s < v.size(); ++s) {
      for (std::size_t y = 0; y < m; ++y) g[s * m + y] = v[s] * pi(s, y);
    }
    joint.vertices.push_back(std::move(g));
  }
  std::sort(joint.vertices.begin(), joint.vertices.end());
  joint.vertices.erase(std::unique(joint.vertices.begin(), joint.vertices.end()),
                       joint.vertices.end());
  return joint;
}

JointCredalSet JointInterim(const InformationStructure& is, std::size_t vertex_cap) {
  std::size_t total = 1;
  for (const auto& p : is.posteriors()) {
    if (total > vertex_cap / p.num_vertices()) {
      Fail(ErrorKind::kSupportTooLarge,
           "joint set would have more than " + std::to_string(vertex_cap) + " vertices");
    }
    total *= p.num_vertices();
  }
  const std::size_t n = is.states().size();
  const std::size_t m = is.size();
  JointCredalSet joint{is.states(), is.signals(), {}};
  std::vector<std::size_t> pick(m, 0);
  for (std::size_t count = 0; count < total; ++count) {
    Vector g(n * m);
    for (std::size_t y = 0; y < m; ++y) {
      const Vector& p = is.posteriors()[y].vertices()[pick[y]];
      for (std::size_t s = 0; s < n; ++s) g[s * m + y] = is.weights()[y] * p[s];
    }
    joint.vertices.push_back(std::move(g));
    for (std::size_t y = m; y-- > 0;) {
      if (++pick[y] < is.posteriors()[y].num_vertices()) break;
      pick[y] = 0;
    }
  }
  std::sort(joint.vertices.begin(), joint.vertices.end());
  return joint;
}

CredalSet StateMarginal(const JointCredalSet& joint) {
  const std::size_t n = joint.states.size();
  const std::size_t m = joint.signals.size();
  std::vector<Vector> pts;
  for (const auto& g : joint.vertices) {
    Vector p(n);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t y = 0; y < m; ++y) p[s] += g[s * m + y];
    }
    pts.push_back(std::move(p));
  }
  return Canonicalize(joint.states, std::move(pts));
}

std::vector<Vector> SignalMarginal(const JointCredalSet& joint) {
  const std::size_t n = joint.states.size();
  const std::size_t m = joint.signals.size();
  std::vector<Vector> pts;
  for (const auto& g : joint.vertices) {
    Vector q(m);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t y = 0; y < m; ++y) q[y] += g[s * m + y];
    }
    pts.push_back(std::move(q));
  }
  return ExtremePoints(std::move(pts));
}

}  // namespace partid
