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

// Prior sets of the form  P = sum_phi tau(phi) P_phi  with P_phi a
// full-dimensional subset of Delta(phi).

#ifndef PARTID_IDENTIFICATION_HPP_
#define PARTID_IDENTIFICATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partid/geometry.hpp"
#include "partid/rational.hpp"

namespace partid {

// Cells are sorted, nonempty, disjoint and cover {0..n-1}; they are ordered
// by smallest member.
class Partition {
 public:
  // Throws MalformedInput unless `cells` partitions {0..num_states-1}.
  Partition(std::size_t num_states, std::vector<Event> cells);

  static Partition Discrete(std::size_t num_states);
  static Partition Trivial(std::size_t num_states);

  std::size_t num_states() const { return cell_of_.size(); }
  std::size_t size() const { return cells_.size(); }
  const std::vector<Event>& cells() const { return cells_; }
  const Event& cell(std::size_t k) const { return cells_[k]; }
  std::size_t cell_of(std::size_t state) const { return cell_of_[state]; }
  bool is_trivial() const { return cells_.size() == 1; }
  bool is_discrete() const { return cells_.size() == cell_of_.size(); }

  // Every cell of *this lies inside a cell of `coarser`.
  bool Refines(const Partition& coarser) const;

  bool operator==(const Partition& other) const { return cells_ == other.cells_; }

 private:
  std::vector<Event> cells_;
  std::vector<std::size_t> cell_of_;
};

// tau is a probability vector over the cells. Zero entries are allowed here
// because reduced-form posteriors can vanish on a cell; operations that need
// full support check it themselves.
struct ReducedForm {
  Partition partition;
  Vector tau;

  // Throws DimensionMismatch, NotInSimplex.
  ReducedForm(Partition partition, Vector tau);

  bool full_support() const;
};

struct PartitionedPrior {
  ReducedForm reduced;
  std::vector<CredalSet> cell_sets;
  CredalSet assembled;
};

// Throws NotFullSupport, DimensionMismatch, SupportViolation,
// DimensionDeficient.
PartitionedPrior Assemble(const ReducedForm& reduced, std::vector<CredalSet> cell_sets);

// P = sum_phi tau(phi) Delta(phi).
PartitionedPrior FullAmbiguity(const StateSpace& states, const ReducedForm& reduced);

// Cell masses, required to be the same at every vertex. Throws
// NonConstantCellMass, DimensionMismatch.
ReducedForm CompatibilityTau(const CredalSet& c, const Partition& partition);

// Classes of the relation  s ~ t  iff  x(s) = x(t)  for every x orthogonal to
// all vertex differences.
Partition RecoverPartition(const CredalSet& c);

struct IdentificationReport {
  std::optional<PartitionedPrior> prior;
  Partition recovered;
  // The recovered partition is not {Theta}.
  bool nontrivial = false;
  // Empty on success; otherwise the first clause that failed: "compatibility",
  // "support", "dimension" or "reassembly", followed by detail.
  std::string diagnostic;
};

IdentificationReport CheckPartiallyIdentified(const CredalSet& c);

struct Maximality {
  enum class Verdict { kYes, kNo, kUnknown };
  Verdict verdict = Verdict::kUnknown;
  // For No: the first cell whose set is not extreme, and a split of it.
  std::optional<std::size_t> witness_cell;
  std::optional<std::pair<CredalSet, CredalSet>> witness;
};

Maximality CheckMaximal(const PartitionedPrior& pp);

}  // namespace partid

#endif  // PARTID_IDENTIFICATION_HPP_
