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

// Data-parallel inner loops. Every kernel has a serial reference with the
// same contract; the OpenMP variant must return identical results and is
// checked against the reference in tests/test_kernels.cpp.

#ifndef PARTID_KERNELS_HPP_
#define PARTID_KERNELS_HPP_

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "partid/rational.hpp"

namespace partid {

enum class Execution { kSerial, kParallel };

// Thread count for the parallel kernels; n <= 0 keeps the runtime default.
void SetThreadCount(int n);

namespace kernels {

inline constexpr std::size_t kNoSkip = std::numeric_limits<std::size_t>::max();

// True iff p is a convex combination of points[k] over k not in {skip_a,
// skip_b}.
bool HullMembership(const std::vector<Vector>& points, const Vector& p,
                    std::size_t skip_a = kNoSkip, std::size_t skip_b = kNoSkip);

// mask[i] = 1 iff points[i] is not a convex combination of the others.
// Points must be distinct.
std::vector<char> ExtremeMaskSerial(const std::vector<Vector>& points);
std::vector<char> ExtremeMaskParallel(const std::vector<Vector>& points);

// mask[k] = 1 iff [vertices[i], vertices[j]] is an edge of the hull, for
// pairs[k] = (i, j). The midpoint of an edge is a combination of its two
// endpoints only.
std::vector<char> EdgeMaskSerial(
    const std::vector<Vector>& vertices,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
std::vector<char> EdgeMaskParallel(
    const std::vector<Vector>& vertices,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

// contribution(v, y, a): the share of prior v's Bayes risk from taking
// action a after signal y. A pure rule's risk under v is the sum over y of
// contribution(v, y, rule(y)).
class RiskTensor {
 public:
  RiskTensor(std::size_t priors, std::size_t signals, std::size_t actions)
      : priors_(priors), signals_(signals), actions_(actions),
        data_(priors * signals * actions) {}

  std::size_t priors() const { return priors_; }
  std::size_t signals() const { return signals_; }
  std::size_t actions() const { return actions_; }

  Rational& operator()(std::size_t v, std::size_t y, std::size_t a) {
    return data_[(v * signals_ + y) * actions_ + a];
  }
  const Rational& operator()(std::size_t v, std::size_t y, std::size_t a) const {
    return data_[(v * signals_ + y) * actions_ + a];
  }

  // actions^signals, or nullopt-like max() on overflow past `cap`.
  std::size_t NumRules(std::size_t cap) const;

 private:
  std::size_t priors_;
  std::size_t signals_;
  std::size_t actions_;
  std::vector<Rational> data_;
};

// Rule index r encodes rule(y) as base-|A| digits with signal 0 most
// significant, so index order is lexicographic order on rules.
std::vector<std::size_t> DecodeRule(std::size_t index, std::size_t signals,
                                    std::size_t actions);

struct RuleSearchResult {
  std::size_t rule_index = 0;
  Rational value;
};

// argmin over all pure rules of max over priors of Bayes risk; ties go to the
// smallest rule index.
RuleSearchResult MinimaxRuleSerial(const RiskTensor& risk);
RuleSearchResult MinimaxRuleParallel(const RiskTensor& risk);

}  // namespace kernels
}  // namespace partid

#endif  // PARTID_KERNELS_HPP_
