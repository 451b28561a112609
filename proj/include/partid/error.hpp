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

#ifndef PARTID_ERROR_HPP_
#define PARTID_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace partid {

// Every failure the library reports is an Error carrying one of these kinds.
// MalformedInput is reserved for unparseable problem files; everything else is
// a domain error.
enum class ErrorKind {
  kMalformedProgram,
  kMalformedInput,
  kEmptyInput,
  kNotInSimplex,
  kDimensionMismatch,
  kWeightMismatch,
  kZeroMassEvent,
  kNonConstantMass,
  kSupportViolation,
  kDimensionDeficient,
  kNonConstantCellMass,
  kNotFullSupport,
  kInconsistentExperiment,
  kZeroProbabilitySignal,
  kFullDimensional,
  kSignalMismatch,
  kNotPlausible,
  kCellMismatch,
  kNotMaximal,
  kSupportTooLarge,
  kIncompleteRule,
  kEnumerationTooLarge,
  kOutOfRange,
  kUnknownLabel,
  kInvariantViolation,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind), detail_(message) {}

  ErrorKind kind() const { return kind_; }
  // The message without the kind prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace partid

#endif  // PARTID_ERROR_HPP_
