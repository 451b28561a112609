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

#include "partid/identification.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "partid/error.hpp"
#include "partid/matrix.hpp"

namespace partid {

Partition::Partition(std::size_t num_states, std::vector<Event> cells)
    : cell_of_(num_states, std::numeric_limits<std::size_t>::max()) {
  if (num_states == 0) Fail(ErrorKind::kEmptyInput, "partition of no states");
  for (auto& c : cells) {
    if (c.empty()) Fail(ErrorKind::kMalformedInput, "empty partition cell");
    std::sort(c.begin(), c.end());
  }
  std::sort(cells.begin(), cells.end());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    for (std::size_t s : cells[k]) {
      if (s >= num_states) Fail(ErrorKind::kMalformedInput, "cell state out of range");
      if (cell_of_[s] != std::numeric_limits<std::size_t>::max()) {
        Fail(ErrorKind::kMalformedInput, "state appears in two cells");
      }
      cell_of_[s] = k;
    }
  }
  for (std::size_t s = 0; s < num_states; ++s) {
    if (cell_of_[s] == std::numeric_limits<std::size_t>::max()) {
      Fail(ErrorKind::kMalformedInput, "cells do not cover every state");
    }
  }
  cells_ = std::move(cells);
}

Partition Partition::Discrete(std::size_t num_states) {
  std::vector<Event> cells;
  for (std::size_t s = 0; s < num_states; ++s) cells.push_back({s});
  return Partition(num_states, std::move(cells));
}

Partition Partition::Trivial(std::size_t num_states) {
  Event all(num_states);
  for (std::size_t s = 0; s < num_states; ++s) all[s] = s;
  return Partition(num_states, {all});
}

bool Partition::Refines(const Partition& coarser) const {
  if (coarser.num_states() != num_states()) return false;
  for (const auto& c : cells_) {
    const std::size_t k = coarser.cell_of(c.front());
    for (std::size_t s : c) {
      if (coarser.cell_of(s) != k) return false;
    }
  }
  return true;
}

ReducedForm::ReducedForm(Partition p, Vector t)
    : partition(std::move(p)), tau(std::move(t)) {
  if (tau.size() != partition.size()) {
    Fail(ErrorKind::kDimensionMismatch, "tau needs one entry per cell");
  }
  if (!IsDistribution(tau)) {
    Fail(ErrorKind::kNotInSimplex, "tau is not a probability vector");
  }
}

bool ReducedForm::full_support() const {
  return std::all_of(tau.begin(), tau.end(), [](const Rational& x) { return x > 0; });
}

PartitionedPrior Assemble(const ReducedForm& reduced, std::vector<CredalSet> cell_sets) {
  const Partition& part = reduced.partition;
  if (!reduced.full_support()) {
    Fail(ErrorKind::kNotFullSupport, "tau must be positive on every cell");
  }
  if (cell_sets.size() != part.size()) {
    Fail(ErrorKind::kDimensionMismatch, "one credal set per cell is required");
  }
  for (std::size_t k = 0; k < part.size(); ++k) {
    const CredalSet& c = cell_sets[k];
    if (c.states().size() != part.num_states()) {
      Fail(ErrorKind::kDimensionMismatch, "cell set on the wrong state space");
    }
    for (std::size_t s : Support(c)) {
      if (part.cell_of(s) != k) {
        Fail(ErrorKind::kSupportViolation,
             "cell " + std::to_string(k) + " set puts mass on state '" +
                 c.states().label(s) + "' outside the cell");
      }
    }
    if (Dim(c) + 1 != part.cell(k).size()) {
      Fail(ErrorKind::kDimensionDeficient,
           "cell " + std::to_string(k) + " set has dimension " + std::to_string(Dim(c)) +
               ", needs " + std::to_string(part.cell(k).size() - 1));
    }
  }
  CredalSet assembled = MinkowskiMix(reduced.tau, cell_sets);
  return PartitionedPrior{reduced, std::move(cell_sets), std::move(assembled)};
}

PartitionedPrior FullAmbiguity(const StateSpace& states, const ReducedForm& reduced) {
  if (states.size() != reduced.partition.num_states()) {
    Fail(ErrorKind::kDimensionMismatch, "partition and state space disagree on |states|");
  }
  std::vector<CredalSet> cells;
  for (const auto& cell : reduced.partition.cells()) cells.push_back(SubSimplex(states, cell));
  return Assemble(reduced, std::move(cells));
}

ReducedForm CompatibilityTau(const CredalSet& c, const Partition& partition) {
  if (c.states().size() != partition.num_states()) {
    Fail(ErrorKind::kDimensionMismatch, "partition and credal set disagree on |states|");
  }
  Vector tau;
  for (std::size_t k = 0; k < partition.size(); ++k) {
    const Vector masses = EventMasses(c, partition.cell(k));
    for (const auto& m : masses) {
      if (m != masses.front()) {
        Fail(ErrorKind::kNonConstantCellMass,
             "mass of cell " + std::to_string(k) + " varies across vertices (" +
                 ToString(masses.front()) + " vs " + ToString(m) + ")");
      }
    }
    tau.push_back(masses.front());
  }
  return ReducedForm(partition, std::move(tau));
}

Partition RecoverPartition(const CredalSet& c) {
  const auto& v = c.vertices();
  const std::size_t n = c.states().size();
  RationalMatrix diff(0, n);
  for (std::size_t i = 1; i < v.size(); ++i) {
    Vector d(n);
    for (std::size_t t = 0; t < n; ++t) d[t] = v[i][t] - v[0][t];
    diff.AppendRow(d);
  }
  const auto basis = NullspaceBasis(diff);
  // Each state's signature is its column of the basis.
  std::map<Vector, Event> classes;
  for (std::size_t t = 0; t < n; ++t) {
    Vector sig;
    sig.reserve(basis.size());
    for (const auto& x : basis) sig.push_back(x[t]);
    classes[sig].push_back(t);
  }
  std::vector<Event> cells;
  for (auto& [sig, cell] : classes) cells.push_back(std::move(cell));
  return Partition(n, std::move(cells));
}

IdentificationReport CheckPartiallyIdentified(const CredalSet& c) {
  IdentificationReport report{std::nullopt, RecoverPartition(c), false, ""};
  report.nontrivial = !report.recovered.is_trivial();
  const Partition& part = report.recovered;

  std::optional<ReducedForm> reduced;
  try {
    reduced.emplace(CompatibilityTau(c, part));
  } catch (const Error& e) {
    report.diagnostic = std::string("compatibility: ") + e.what();
    return report;
  }
  if (!reduced->full_support()) {
    report.diagnostic = "support: some cell has zero mass";
    return report;
  }
  std::vector<CredalSet> cells;
  for (std::size_t k = 0; k < part.size(); ++k) {
    CredalSet pk = ConditionOnEvent(c, part.cell(k));
    if (Dim(pk) + 1 != part.cell(k).size()) {
      report.diagnostic = "dimension: cell " + std::to_string(k) +
                          " conditional set has dimension " + std::to_string(Dim(pk)) +
                          ", needs " + std::to_string(part.cell(k).size() - 1);
      return report;
    }
    cells.push_back(std::move(pk));
  }
  PartitionedPrior pp = Assemble(*reduced, std::move(cells));
  if (!Equals(pp.assembled, c)) {
    report.diagnostic = "reassembly: mixing the cell conditionals does not reproduce the set";
    return report;
  }
  report.prior.emplace(std::move(pp));
  return report;
}

Maximality CheckMaximal(const PartitionedPrior& pp) {
  Maximality out;
  bool unknown = false;
  for (std::size_t k = 0; k < pp.cell_sets.size(); ++k) {
    Extremeness ex = IsExtremeInK(pp.cell_sets[k]);
    if (ex.verdict == Extremeness::Verdict::kNotExtreme) {
      out.verdict = Maximality::Verdict::kNo;
      out.witness_cell = k;
      out.witness = std::move(ex.witness);
      return out;
    }
    if (ex.verdict == Extremeness::Verdict::kUnknown) unknown = true;
  }
  out.verdict = unknown ? Maximality::Verdict::kUnknown : Maximality::Verdict::kYes;
  return out;
}

}  // namespace partid
