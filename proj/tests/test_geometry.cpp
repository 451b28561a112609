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

#include <algorithm>
#include <functional>

#include "doctest.h"
#include "partid/error.hpp"
#include "partid/geometry.hpp"
#include "support/random.hpp"

using namespace partid;
using namespace partid::testing;

namespace {

Rational Q(long p, long q = 1) { return Rational(p, q); }

const StateSpace& Rgb() {
  static const StateSpace s({"R", "G", "B"});
  return s;
}

const StateSpace& Rgby() {
  static const StateSpace s({"R", "G", "B", "Y"});
  return s;
}

CredalSet Ellsberg() {
  return Canonicalize(Rgb(), {{Q(1, 3), Q(2, 3), Q(0)}, {Q(1, 3), Q(0), Q(2, 3)}});
}

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kInvariantViolation;
}

// Andrew's monotone chain on the (p0, p1) projection, dropping collinear
// points. Points on a 3-state simplex are determined by that projection.
std::vector<Vector> Hull2D(std::vector<Vector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  auto cross = [](const Vector& o, const Vector& a, const Vector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vector> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t start = hull.size();
    for (const auto& p : pts) {
      while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
        hull.pop_back();
      }
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  std::sort(hull.begin(), hull.end());
  hull.erase(std::unique(hull.begin(), hull.end()), hull.end());
  return hull;
}

void CheckWitness(const CredalSet& c, const Extremeness& ex) {
  REQUIRE(ex.verdict == Extremeness::Verdict::kNotExtreme);
  REQUIRE(ex.witness);
  const auto& [q, q2] = *ex.witness;
  CHECK_FALSE(q == q2);
  CHECK(MinkowskiMix({Q(1, 2), Q(1, 2)}, {q, q2}) == c);
}

}  // namespace

TEST_CASE("state space") {
  CHECK(Rgb().IndexOf("B") == 2);
  CHECK(KindOf([] { (void)Rgb().IndexOf("Z"); }) == ErrorKind::kUnknownLabel);
  CHECK(KindOf([] { StateSpace({"a", "a"}); }) == ErrorKind::kMalformedInput);
  CHECK(KindOf([] { StateSpace(std::vector<std::string>{}); }) == ErrorKind::kEmptyInput);
}

TEST_CASE("canonicalize") {
  const StateSpace two({"a", "b"});
  const auto c = Canonicalize(two, {{Q(1), Q(0)}, {Q(0), Q(1)}, {Q(1, 2), Q(1, 2)}});
  CHECK(c.vertices() == std::vector<Vector>{{Q(0), Q(1)}, {Q(1), Q(0)}});

  const auto single = Canonicalize(Rgb(), {{Q(1, 3), Q(1, 3), Q(1, 3)}});
  CHECK(single.vertices() == std::vector<Vector>{{Q(1, 3), Q(1, 3), Q(1, 3)}});

  const auto e = Canonicalize(Rgb(), {{Q(1, 3), Q(2, 3), Q(0)},
                                      {Q(1, 3), Q(0), Q(2, 3)},
                                      {Q(1, 3), Q(1, 3), Q(1, 3)}});
  CHECK(e.vertices() ==
        std::vector<Vector>{{Q(1, 3), Q(0), Q(2, 3)}, {Q(1, 3), Q(2, 3), Q(0)}});

  CHECK(KindOf([] { Canonicalize(Rgb(), {}); }) == ErrorKind::kEmptyInput);
  CHECK(KindOf([] { Canonicalize(Rgb(), {{Q(1, 2), Q(1, 2), Q(1, 2)}}); }) ==
        ErrorKind::kNotInSimplex);
  CHECK(KindOf([] { Canonicalize(Rgb(), {{Q(1, 2), Q(1, 2)}}); }) ==
        ErrorKind::kDimensionMismatch);
}

TEST_CASE("canonicalize agrees with a planar hull oracle") {
  Rng rng(31);
  const auto states = NumberedStates(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vector> pts;
    const auto count = UniformInt(rng, 1, 10);
    for (long i = 0; i < count; ++i) pts.push_back(RandomDistribution(rng, 3, 5));
    const auto serial = Canonicalize(states, pts, Execution::kSerial);
    const auto parallel = Canonicalize(states, pts, Execution::kParallel);
    CHECK(serial == parallel);
    CHECK(serial.vertices() == Hull2D(pts));
    // Idempotent.
    CHECK(Canonicalize(states, serial.vertices()) == serial);
  }
}

TEST_CASE("contains") {
  const auto e = Ellsberg();
  for (const auto& v : e.vertices()) CHECK(Contains(e, v));
  CHECK(Contains(e, {Q(1, 3), Q(1, 3), Q(1, 3)}));
  CHECK_FALSE(Contains(e, {Q(1, 2), Q(1, 4), Q(1, 4)}));
  CHECK(KindOf([&] { (void)Contains(e, {Q(1)}); }) == ErrorKind::kDimensionMismatch);
}

TEST_CASE("equals") {
  const auto e = Ellsberg();
  CHECK(Equals(e, e));
  const auto redundant = Canonicalize(Rgb(), {{Q(1, 3), Q(2, 3), Q(0)},
                                              {Q(1, 3), Q(1, 2), Q(1, 6)},
                                              {Q(1, 3), Q(0), Q(2, 3)}});
  CHECK(Equals(e, redundant));
  CHECK_FALSE(Equals(e, FullSimplex(Rgb())));
  CHECK(KindOf([&] { (void)Equals(e, FullSimplex(Rgby())); }) ==
        ErrorKind::kDimensionMismatch);
}

TEST_CASE("dim") {
  CHECK(Dim(PointSet(Rgb(), {Q(1, 3), Q(1, 3), Q(1, 3)})) == 0);
  CHECK(Dim(FullSimplex(Rgb())) == 2);
  CHECK(Dim(Ellsberg()) == 1);
}

TEST_CASE("minkowski mix") {
  const auto e = Ellsberg();
  CHECK(MinkowskiMix({Q(1)}, {e}) == e);
  const auto mixed = MinkowskiMix({Q(1, 3), Q(2, 3)}, {SubSimplex(Rgb(), {0}),
                                                      SubSimplex(Rgb(), {1, 2})});
  CHECK(mixed == e);
  const auto q = PointSet(Rgb(), {Q(1, 6), Q(1, 2), Q(1, 3)});
  CHECK(MinkowskiMix({Q(1, 2), Q(1, 2)}, {q, q}) == q);
  CHECK(MinkowskiMix({Q(0), Q(1)}, {FullSimplex(Rgb()), q}) == q);
  CHECK(KindOf([&] { MinkowskiMix({Q(1, 2)}, {q, q}); }) == ErrorKind::kWeightMismatch);
  CHECK(KindOf([&] { MinkowskiMix({Q(1, 2), Q(1, 3)}, {q, q}); }) ==
        ErrorKind::kWeightMismatch);
  CHECK(KindOf([&] { MinkowskiMix({Q(3, 2), Q(-1, 2)}, {q, q}); }) ==
        ErrorKind::kWeightMismatch);
}

TEST_CASE("support function") {
  const auto e = Ellsberg();
  CHECK(SupportFunction(e, {Q(0), Q(0), Q(0)}) == 0);
  CHECK(SupportFunction(e, {Q(1), Q(1), Q(1)}) == 1);
  CHECK(SupportFunction(e, {Q(0), Q(1), Q(0)}) == Q(2, 3));
  CHECK(KindOf([&] { (void)SupportFunction(e, {Q(1)}); }) ==
        ErrorKind::kDimensionMismatch);
}

TEST_CASE("conditioning") {
  const Vector p{Q(1, 6), Q(1, 2), Q(1, 3)};
  const auto c = ConditionOnEvent(PointSet(Rgb(), p), {1, 2});
  CHECK(c.vertices() == std::vector<Vector>{{Q(0), Q(3, 5), Q(2, 5)}});

  const auto gb = ConditionOnEvent(Ellsberg(), {1, 2});
  CHECK(gb == SubSimplex(Rgb(), {1, 2}));
  CHECK(KindOf([] { ConditionOnEvent(Ellsberg(), {0, 1}); }) ==
        ErrorKind::kNonConstantMass);
  CHECK(KindOf([] { ConditionOnEvent(SubSimplex(Rgb(), {1, 2}), {0}); }) ==
        ErrorKind::kZeroMassEvent);
  CHECK(EventMasses(Ellsberg(), {0, 1}) == Vector{Q(1, 3), Q(1)});
  CHECK(Support(Ellsberg()) == Event{0, 1, 2});
}

TEST_CASE("extremeness: cells of size two") {
  const auto ex = IsExtremeInK(SubSimplex(Rgb(), {1, 2}));
  CHECK(ex.verdict == Extremeness::Verdict::kExtreme);
  CHECK_FALSE(ex.witness);

  // {p in Delta({G,B}) : p(G) >= p(B)}
  const auto half = Canonicalize(Rgb(), {{Q(0), Q(1), Q(0)}, {Q(0), Q(1, 2), Q(1, 2)}});
  CheckWitness(half, IsExtremeInK(half));

  const auto inner = Canonicalize(Rgb(), {{Q(0), Q(3, 4), Q(1, 4)}, {Q(0), Q(1, 4), Q(3, 4)}});
  CheckWitness(inner, IsExtremeInK(inner));
}

TEST_CASE("extremeness: cells of size three") {
  // Triangle: vertices B, Y and the midpoint of G and B.
  const auto pb = Canonicalize(Rgby(), {{Q(0), Q(0), Q(1), Q(0)},
                                        {Q(0), Q(0), Q(0), Q(1)},
                                        {Q(0), Q(1, 2), Q(1, 2), Q(0)}});
  CHECK(IsExtremeInK(pb).verdict == Extremeness::Verdict::kExtreme);
  CHECK(IsExtremeInK(SubSimplex(Rgby(), {1, 2, 3})).verdict ==
        Extremeness::Verdict::kExtreme);

  // A quadrilateral cut from Delta({G,B,Y}) by p(G) <= 1/2.
  const auto quad = Canonicalize(Rgby(), {{Q(0), Q(0), Q(1), Q(0)},
                                          {Q(0), Q(0), Q(0), Q(1)},
                                          {Q(0), Q(1, 2), Q(1, 2), Q(0)},
                                          {Q(0), Q(1, 2), Q(0), Q(1, 2)}});
  CheckWitness(quad, IsExtremeInK(quad));

  // A triangle away from the boundary can be translated both ways.
  const auto interior = Canonicalize(Rgby(), {{Q(0), Q(1, 2), Q(1, 4), Q(1, 4)},
                                              {Q(0), Q(1, 4), Q(1, 2), Q(1, 4)},
                                              {Q(0), Q(1, 4), Q(1, 4), Q(1, 2)}});
  CheckWitness(interior, IsExtremeInK(interior));
}

TEST_CASE("extremeness: singletons and larger cells") {
  CHECK(IsExtremeInK(PointSet(Rgb(), {Q(0), Q(1), Q(0)})).verdict ==
        Extremeness::Verdict::kExtreme);
  const auto mixed = PointSet(Rgb(), {Q(0), Q(1, 3), Q(2, 3)});
  CheckWitness(mixed, IsExtremeInK(mixed));

  const auto s5 = NumberedStates(5);
  CHECK(IsExtremeInK(FullSimplex(s5)).verdict == Extremeness::Verdict::kExtreme);
  // Simplex on four states with one corner pulled in stays a tetrahedron
  // through that corner's three faces, so it is extreme.
  const auto tetra = Canonicalize(Rgby(), {{Q(1), Q(0), Q(0), Q(0)},
                                           {Q(0), Q(1), Q(0), Q(0)},
                                           {Q(0), Q(0), Q(1), Q(0)},
                                           {Q(1, 2), Q(0), Q(0), Q(1, 2)}});
  CHECK(IsExtremeInK(tetra).verdict == Extremeness::Verdict::kExtreme);
  // Product of two edges: a square, a sum of its two edges.
  const auto square = MinkowskiMix({Q(1, 2), Q(1, 2)}, {SubSimplex(Rgby(), {0, 1}),
                                                       SubSimplex(Rgby(), {2, 3})});
  CHECK(square.num_vertices() == 4);
  CheckWitness(square, IsExtremeInK(square));
  CHECK(IsExtremeInK(square, 3).verdict == Extremeness::Verdict::kUnknown);
}

TEST_CASE("extremeness: random witnesses verify") {
  Rng rng(37);
  const auto states = NumberedStates(4);
  int not_extreme = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = RandomCredalSet(rng, states, static_cast<std::size_t>(UniformInt(rng, 1, 6)), 4);
    const auto ex = IsExtremeInK(c);
    CHECK(ex.verdict != Extremeness::Verdict::kUnknown);
    if (ex.verdict == Extremeness::Verdict::kNotExtreme) {
      ++not_extreme;
      CheckWitness(c, ex);
    }
  }
  CHECK(not_extreme > 0);
}

TEST_CASE("edge graph") {
  const auto square = MinkowskiMix({Q(1, 2), Q(1, 2)}, {SubSimplex(Rgby(), {0, 1}),
                                                       SubSimplex(Rgby(), {2, 3})});
  CHECK(EdgeGraph(square.vertices(), Execution::kSerial).size() == 4);
  CHECK(EdgeGraph(square.vertices(), Execution::kParallel) ==
        EdgeGraph(square.vertices(), Execution::kSerial));
  CHECK(EdgeGraph(FullSimplex(Rgby()).vertices()).size() == 6);
}

TEST_CASE("support functions are Minkowski-linear") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(UniformInt(rng, 2, 4));
    const auto states = NumberedStates(n);
    const auto k = static_cast<std::size_t>(UniformInt(rng, 1, 3));
    std::vector<CredalSet> sets;
    for (std::size_t i = 0; i < k; ++i) {
      sets.push_back(RandomCredalSet(rng, states, static_cast<std::size_t>(UniformInt(rng, 1, 4)), 4));
    }
    const Vector w = RandomDistribution(rng, k, 4);
    const auto mix = MinkowskiMix(w, sets);
    for (int d = 0; d < 100; ++d) {
      const Vector u = RandomDirection(rng, n);
      Rational expected = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (w[i] != 0) expected += w[i] * SupportFunction(sets[i], u);
      }
      CHECK(SupportFunction(mix, u) == expected);
    }
    std::size_t dims = 0;
    for (std::size_t i = 0; i < k; ++i) dims += w[i] != 0 ? Dim(sets[i]) : 0;
    CHECK(Dim(mix) <= dims);
  }
}

TEST_CASE("equality agrees with support-function probes") {
  Rng rng(43);
  const auto states = NumberedStates(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = RandomCredalSet(rng, states, 3, 3);
    // Half the time compare against a re-hull with redundant interior points.
    std::vector<Vector> pts = a.vertices();
    CredalSet b = a;
    if (trial % 2 == 0) {
      pts.push_back(RandomDistribution(rng, 3, 3));
      b = Canonicalize(states, pts);
    } else {
      Vector mid(3);
      for (const auto& v : a.vertices()) {
        for (std::size_t t = 0; t < 3; ++t) mid[t] += v[t] / Rational(a.num_vertices());
      }
      pts.push_back(mid);
      b = Canonicalize(states, pts);
    }
    bool probes_agree = true;
    for (std::size_t t = 0; t < 3; ++t) {
      Vector e(3);
      e[t] = 1;
      Vector ne(3);
      ne[t] = -1;
      probes_agree = probes_agree && SupportFunction(a, e) == SupportFunction(b, e) &&
                     SupportFunction(a, ne) == SupportFunction(b, ne);
    }
    for (int d = 0; d < 100; ++d) {
      const auto u = RandomDirection(rng, 3);
      probes_agree = probes_agree && SupportFunction(a, u) == SupportFunction(b, u);
    }
    const bool mutual = std::all_of(a.vertices().begin(), a.vertices().end(),
                                    [&](const Vector& v) { return Contains(b, v); }) &&
                        std::all_of(b.vertices().begin(), b.vertices().end(),
                                    [&](const Vector& v) { return Contains(a, v); });
    CHECK(Equals(a, b) == mutual);
    if (mutual) CHECK(probes_agree);
  }
}

TEST_CASE("conditioning on cells then re-mixing reproduces a decomposable prior") {
  Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(UniformInt(rng, 2, 5));
    const auto states = NumberedStates(n);
    const auto cells = RandomPartition(rng, n, 3);
    Vector tau = RandomInterior(rng, cells.size(), 5);
    std::vector<CredalSet> parts;
    for (const auto& cell : cells) {
      parts.push_back(RandomCredalSet(rng, states, 3, 4, cell));
    }
    const auto prior = MinkowskiMix(tau, parts);
    std::vector<CredalSet> conditioned;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const auto masses = EventMasses(prior, cells[k]);
      for (const auto& m : masses) CHECK(m == tau[k]);
      conditioned.push_back(ConditionOnEvent(prior, cells[k]));
      CHECK(conditioned.back() == parts[k]);
    }
    CHECK(MinkowskiMix(tau, conditioned) == prior);
  }
}
