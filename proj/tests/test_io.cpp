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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "partid/decisions.hpp"
#include "partid/error.hpp"
#include "partid/io.hpp"
#include "support/experiments.hpp"
#include "support/priors.hpp"

using namespace partid;
using namespace partid::testing;

namespace {

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Kind and message of the error `text` raises.
std::pair<ErrorKind, std::string> ErrorOf(const std::string& text) {
  try {
    ParseProblemText(text);
  } catch (const Error& e) {
    return {e.kind(), e.detail()};
  }
  FAIL("expected an error");
  return {ErrorKind::kInvariantViolation, ""};
}

const char* kStates = R"("states": ["R", "G", "B"])";

}  // namespace

TEST_CASE("bundled problems round-trip") {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(PARTID_SOURCE_DIR "/problems")) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    const ProblemFile once = ParseProblemText(Slurp(entry.path()));
    const Json encoded = ToJson(once);
    const ProblemFile twice = ParseProblem(encoded);
    CHECK(SameProblem(once, twice));
    CHECK(ToJson(twice).dump() == encoded.dump());
    ++files;
  }
  CHECK(files >= 6);
}

TEST_CASE("sections decode to library objects") {
  const ProblemFile p = ParseProblemText(Slurp(PARTID_SOURCE_DIR "/problems/ellsberg.json"));
  REQUIRE(p.prior_set);
  CHECK(*p.prior_set == EllsbergSet());
  REQUIRE(p.experiment);
  CHECK(*p.experiment == EllsbergSignal());
  REQUIRE(p.loss);
  CHECK(p.loss->actions() == std::vector<std::string>{"convict", "acquit"});

  const ProblemFile pp = ParseProblemText(Slurp(PARTID_SOURCE_DIR "/problems/ellsberg_partitioned.json"));
  REQUIRE(pp.partitioned_prior);
  CHECK(pp.partitioned_prior->assembled == EllsbergSet());
  REQUIRE(pp.information_structure);
  CHECK(pp.information_structure->weights() == Vector{Rational(2, 3), Rational(1, 3)});
}

TEST_CASE("reordered cells keep their masses") {
  const ProblemFile p = ParseProblemText(std::string("{") + kStates +
                                         R"(, "partitioned_prior": {"cells": [["G", "B"], ["R"]],
                                         "tau": ["2/3", "1/3"]}})");
  REQUIRE(p.partitioned_prior);
  CHECK(p.partitioned_prior->reduced.tau == Vector{Rational(1, 3), Rational(2, 3)});
  CHECK(p.partitioned_prior->assembled == EllsbergSet());
}

TEST_CASE("malformed input names the failing pointer") {
  auto [k1, m1] = ErrorOf("{\"states\": [\"R\", ");
  CHECK(k1 == ErrorKind::kMalformedInput);

  auto [k2, m2] = ErrorOf(std::string("{") + kStates +
                          R"(, "experiment": {"signals": ["a"], "likelihood": {"R": ["1"], "G": [0.5], "B": ["1"]}}})");
  CHECK(k2 == ErrorKind::kMalformedInput);
  CHECK(m2.rfind("/experiment/likelihood/G/0", 0) == 0);

  auto [k3, m3] = ErrorOf(std::string("{") + kStates + R"(, "experiment": {"signals": ["a"], "likelihood": {"R": ["1"]}}})");
  CHECK(k3 == ErrorKind::kMalformedInput);
  CHECK(m3.rfind("/experiment/likelihood", 0) == 0);

  auto [k4, m4] = ErrorOf(std::string("{") + kStates + R"(, "prior_set": {"vertices": [["1/3", "2/3"]]}})");
  CHECK(k4 == ErrorKind::kMalformedInput);
  CHECK(m4.rfind("/prior_set/vertices/0", 0) == 0);

  auto [k5, m5] = ErrorOf(std::string("{") + kStates + R"(, "prior_set": {"vertices": [["1/3", "2/3", "x"]]}})");
  CHECK(k5 == ErrorKind::kMalformedInput);
  CHECK(m5.rfind("/prior_set/vertices/0/2", 0) == 0);

  auto [k6, m6] = ErrorOf(R"({"prior_set": {"vertices": []}})");
  CHECK(k6 == ErrorKind::kMalformedInput);

  auto [k7, m7] = ErrorOf(std::string("{") + kStates + R"(, "priors": {}})");
  CHECK(k7 == ErrorKind::kMalformedInput);
  CHECK(m7.find("unknown section") != std::string::npos);

  auto [k8, m8] = ErrorOf(std::string("{") + kStates + R"(, "utility": {"actions": ["x"], "utility": {"y": ["1", "1", "1"]}}})");
  CHECK(k8 == ErrorKind::kMalformedInput);
  CHECK(m8.rfind("/utility/utility", 0) == 0);
}

TEST_CASE("domain errors keep their kind") {
  auto [k1, m1] = ErrorOf(std::string("{") + kStates +
                          R"(, "experiment": {"signals": ["a", "b"], "likelihood": {"R": ["1", "1"], "G": ["1", "0"], "B": ["1", "0"]}}})");
  CHECK(k1 == ErrorKind::kNotInSimplex);
  CHECK(m1.rfind("/experiment", 0) == 0);

  auto [k2, m2] = ErrorOf(std::string("{") + kStates + R"(, "prior_set": {"vertices": [["1/2", "1/2", "1/2"]]}})");
  CHECK(k2 == ErrorKind::kNotInSimplex);
  CHECK(m2.rfind("/prior_set/vertices", 0) == 0);

  auto [k3, m3] = ErrorOf(std::string("{") + kStates + R"(, "prior_set": {"simplex": ["R", "Q"]}})");
  CHECK(k3 == ErrorKind::kUnknownLabel);
  CHECK(m3.rfind("/prior_set/simplex/1", 0) == 0);

  auto [k4, m4] = ErrorOf(R"({"persuasion_game": {"prosecutor_judge": {"g": "2", "tau0": "1/2"}}})");
  CHECK(k4 == ErrorKind::kOutOfRange);
}

TEST_CASE("integers are accepted, floats are not") {
  const ProblemFile p = ParseProblemText(std::string("{") + kStates + R"(, "prior_set": {"vertices": [[1, 0, 0]]}})");
  CHECK(p.prior_set->vertices() == std::vector<Vector>{{Rational(1), Rational(0), Rational(0)}});
  CHECK(ErrorOf(std::string("{") + kStates + R"(, "prior_set": {"vertices": [[1.0, 0, 0]]}})").first ==
        ErrorKind::kMalformedInput);
}

TEST_CASE("encoders") {
  CHECK(EncodeRational(Rational(-2, 4)).get<std::string>() == "-1/2");
  CHECK(EncodeCredalSet(EllsbergSet()).dump() ==
        R"({"vertices":[["1/3","0","2/3"],["1/3","2/3","0"]]})");
  CHECK(EncodeExperiment(EllsbergSignal()).dump() ==
        R"({"signals":["a","b"],"likelihood":{"R":["1/2","1/2"],"G":["3/4","1/4"],"B":["3/4","1/4"]}})");
  CHECK(EncodePartition(RgbStates(), Partition(3, {{0}, {1, 2}})).dump() == R"([["R"],["G","B"]])");
}

TEST_CASE("gamma gap fixture") {
  const ProblemFile p = ParseProblemText(Slurp(PARTID_SOURCE_DIR "/tests/fixtures/gamma_gap.json"));
  REQUIRE(p.prior_set);
  REQUIRE(p.experiment);
  REQUIRE(p.loss);
  CHECK(GammaMinimax(*p.prior_set, *p.experiment, *p.loss).value == Rational(1, 2));
  CHECK(GammaStarMinimax(*p.prior_set, *p.experiment, *p.loss).value == Rational(3, 4));
}
