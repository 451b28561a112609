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

#include "partid/kernels.hpp"

#include <omp.h>

#include "partid/lp.hpp"

namespace partid {

void SetThreadCount(int n) {
  if (n > 0) omp_set_num_threads(n);
}

namespace kernels {
namespace {

// Feasibility program over lambda >= 0 indexed by `columns`:
//   sum_k lambda_k points[k] = p,  sum_k lambda_k = 1.
// With `reward` set, maximizes the weight on columns flagged in it.
LPResult HullProgram(const std::vector<Vector>& points, const Vector& p,
                     const std::vector<std::size_t>& columns,
                     const std::vector<char>* reward) {
  const std::size_t k = columns.size();
  LinearProgram lp = LinearProgram::Nonnegative(k);
  const std::size_t d = p.size();
  for (std::size_t t = 0; t < d; ++t) {
    Vector row(k);
    for (std::size_t c = 0; c < k; ++c) row[c] = points[columns[c]][t];
    lp.AddEquality(row, p[t]);
  }
  lp.AddEquality(Vector(k, Rational(1)), Rational(1));
  if (reward != nullptr) {
    for (std::size_t c = 0; c < k; ++c) lp.objective[c] = (*reward)[c] ? 1 : 0;
  }
  return SolveLP(lp);
}

std::vector<std::size_t> ColumnsWithout(std::size_t n, std::size_t skip_a,
                                        std::size_t skip_b) {
  std::vector<std::size_t> cols;
  cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != skip_a && i != skip_b) cols.push_back(i);
  }
  return cols;
}

bool IsEdge(const std::vector<Vector>& vertices, std::size_t i, std::size_t j) {
  Vector mid(vertices[i].size());
  for (std::size_t t = 0; t < mid.size(); ++t) {
    mid[t] = (vertices[i][t] + vertices[j][t]) / 2;
  }
  std::vector<std::size_t> cols(vertices.size());
  std::vector<char> reward(vertices.size());
  for (std::size_t c = 0; c < vertices.size(); ++c) {
    cols[c] = c;
    reward[c] = (c != i && c != j) ? 1 : 0;
  }
  const LPResult r = HullProgram(vertices, mid, cols, &reward);
  return r.optimal() && r.value == 0;
}

Rational RuleWorstRisk(const RiskTensor& risk, const std::vector<std::size_t>& rule) {
  Rational worst;
  for (std::size_t v = 0; v < risk.priors(); ++v) {
    Rational total = 0;
    for (std::size_t y = 0; y < risk.signals(); ++y) total += risk(v, y, rule[y]);
    if (v == 0 || total > worst) worst = std::move(total);
  }
  return worst;
}

bool Better(const Rational& value, std::size_t index, const RuleSearchResult& best,
            bool have_best) {
  if (!have_best) return true;
  if (value != best.value) return value < best.value;
  return index < best.rule_index;
}

}  // namespace

bool HullMembership(const std::vector<Vector>& points, const Vector& p,
                    std::size_t skip_a, std::size_t skip_b) {
  const auto cols = ColumnsWithout(points.size(), skip_a, skip_b);
  if (cols.empty()) return false;
  return HullProgram(points, p, cols, nullptr).optimal();
}

std::vector<char> ExtremeMaskSerial(const std::vector<Vector>& points) {
  std::vector<char> mask(points.size(), 1);
  if (points.size() <= 1) return mask;
  for (std::size_t i = 0; i < points.size(); ++i) {
    mask[i] = HullMembership(points, points[i], i) ? 0 : 1;
  }
  return mask;
}

std::vector<char> ExtremeMaskParallel(const std::vector<Vector>& points) {
  std::vector<char> mask(points.size(), 1);
  if (points.size() <= 1) return mask;
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    mask[u] = HullMembership(points, points[u], u) ? 0 : 1;
  }
  return mask;
}

std::vector<char> EdgeMaskSerial(
    const std::vector<Vector>& vertices,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<char> mask(pairs.size(), 0);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    mask[k] = IsEdge(vertices, pairs[k].first, pairs[k].second) ? 1 : 0;
  }
  return mask;
}

std::vector<char> EdgeMaskParallel(
    const std::vector<Vector>& vertices,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<char> mask(pairs.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto& pr = pairs[static_cast<std::size_t>(k)];
    mask[static_cast<std::size_t>(k)] = IsEdge(vertices, pr.first, pr.second) ? 1 : 0;
  }
  return mask;
}

std::size_t RiskTensor::NumRules(std::size_t cap) const {
  std::size_t total = 1;
  for (std::size_t y = 0; y < signals_; ++y) {
    if (actions_ != 0 && total > cap / actions_) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= actions_;
  }
  return total;
}

std::vector<std::size_t> DecodeRule(std::size_t index, std::size_t signals,
                                    std::size_t actions) {
  std::vector<std::size_t> rule(signals);
  for (std::size_t y = signals; y-- > 0;) {
    rule[y] = index % actions;
    index /= actions;
  }
  return rule;
}

RuleSearchResult MinimaxRuleSerial(const RiskTensor& risk) {
  const std::size_t rules = risk.NumRules(std::numeric_limits<std::size_t>::max());
  RuleSearchResult best;
  bool have = false;
  for (std::size_t r = 0; r < rules; ++r) {
    const auto rule = DecodeRule(r, risk.signals(), risk.actions());
    Rational value = RuleWorstRisk(risk, rule);
    if (Better(value, r, best, have)) {
      best = {r, std::move(value)};
      have = true;
    }
  }
  return best;
}

RuleSearchResult MinimaxRuleParallel(const RiskTensor& risk) {
  const std::size_t rules = risk.NumRules(std::numeric_limits<std::size_t>::max());
  RuleSearchResult best;
  bool have = false;
#pragma omp parallel
  {
    RuleSearchResult local;
    bool local_have = false;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(rules); ++r) {
      const auto ur = static_cast<std::size_t>(r);
      const auto rule = DecodeRule(ur, risk.signals(), risk.actions());
      Rational value = RuleWorstRisk(risk, rule);
      if (Better(value, ur, local, local_have)) {
        local = {ur, std::move(value)};
        local_have = true;
      }
    }
#pragma omp critical(partid_minimax_merge)
    {
      if (local_have && Better(local.value, local.rule_index, best, have)) {
        best = local;
        have = true;
      }
    }
  }
  return best;
}

}  // namespace kernels
}  // namespace partid
