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

// JSON problem files. Rationals travel as strings ("2/3", "0.25", "1");
// plain JSON integers are accepted on input, floats are not. The schema is
// described in docs/problem-format.md.

#ifndef PARTID_IO_HPP_
#define PARTID_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "partid/aumann.hpp"
#include "partid/decisions.hpp"
#include "partid/experiments.hpp"
#include "partid/geometry.hpp"
#include "partid/identification.hpp"

namespace partid {

using Json = nlohmann::ordered_json;

struct ProblemFile {
  std::optional<StateSpace> states;
  std::optional<CredalSet> prior_set;
  std::optional<PartitionedPrior> partitioned_prior;
  std::optional<Experiment> experiment;
  // Named experiments, in file order.
  std::vector<std::pair<std::string, Experiment>> experiments;
  std::optional<InformationStructure> information_structure;
  std::optional<UtilityTable> utility;
  std::optional<LossTable> loss;
  // persuasion_game: the prior is partitioned_prior.
  std::optional<UtilityTable> receiver;
  std::optional<UtilityTable> sender;
};

// Throws MalformedInput naming the JSON pointer of the failing value. Domain
// errors raised while building a section keep their kind and gain the
// pointer as a prefix.
ProblemFile ParseProblem(const Json& doc);
ProblemFile ParseProblemText(std::string_view text);
Json ToJson(const ProblemFile& problem);

// Field-by-field structural equality, signal and action names included.
bool SameProblem(const ProblemFile& a, const ProblemFile& b);

Json EncodeRational(const Rational& value);
Json EncodeVector(const Vector& values);
Json EncodeCredalSet(const CredalSet& c);
Json EncodeEvent(const StateSpace& states, const Event& event);
Json EncodePartition(const StateSpace& states, const Partition& partition);
Json EncodePartitionedPrior(const PartitionedPrior& pp);
Json EncodeExperiment(const Experiment& pi);
Json EncodeKernel(const Kernel& k);
Json EncodeStructure(const InformationStructure& is);
// {"actions": [...], key: {action: [entries per state]}}.
Json EncodeTable(const ActionTable& table, const char* key);

}  // namespace partid

#endif  // PARTID_IO_HPP_
