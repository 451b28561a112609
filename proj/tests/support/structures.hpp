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

#ifndef PARTID_TESTS_SUPPORT_STRUCTURES_HPP_
#define PARTID_TESTS_SUPPORT_STRUCTURES_HPP_

#include <optional>
#include <vector>

#include "partid/aumann.hpp"
#include "partid/identification.hpp"
#include "support/random.hpp"

namespace partid::testing {

// Draws a cell-level likelihood with positive entries, then takes the
// Bayes-plausible reduced-form split it induces and mixes the cell sets.
inline InformationStructure RandomPlausibleStructure(Rng& rng, const PartitionedPrior& pp,
                                                     std::size_t signals) {
  const std::size_t cells = pp.reduced.partition.size();
  std::vector<Vector> lik(cells);
  for (auto& row : lik) row = RandomInterior(rng, signals, 4);
  Vector mu(signals);
  for (std::size_t y = 0; y < signals; ++y) {
    for (std::size_t k = 0; k < cells; ++k) mu[y] += pp.reduced.tau[k] * lik[k][y];
  }
  std::vector<CredalSet> posteriors;
  for (std::size_t y = 0; y < signals; ++y) {
    Vector tau_y(cells);
    for (std::size_t k = 0; k < cells; ++k) tau_y[k] = pp.reduced.tau[k] * lik[k][y] / mu[y];
    posteriors.push_back(MinkowskiMix(tau_y, pp.cell_sets));
  }
  return InformationStructure(mu, posteriors);
}

// For a prior with a non-extreme cell: the even split that replaces that cell
// set by each half of its witness. Plausible, but no posterior is a mixture
// of the prior's cell sets.
inline std::optional<InformationStructure> WitnessSplit(const PartitionedPrior& pp) {
  const Maximality m = CheckMaximal(pp);
  if (m.verdict != Maximality::Verdict::kNo) return std::nullopt;
  std::vector<CredalSet> a = pp.cell_sets;
  std::vector<CredalSet> b = pp.cell_sets;
  a[*m.witness_cell] = m.witness->first;
  b[*m.witness_cell] = m.witness->second;
  std::vector<CredalSet> posteriors{MinkowskiMix(pp.reduced.tau, a),
                                    MinkowskiMix(pp.reduced.tau, b)};
  return InformationStructure({Rational(1, 2), Rational(1, 2)}, posteriors);
}

}  // namespace partid::testing

#endif  // PARTID_TESTS_SUPPORT_STRUCTURES_HPP_
