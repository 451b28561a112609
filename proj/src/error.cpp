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

#include "partid/error.hpp"

namespace partid {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedProgram: return "MalformedProgram";
    case ErrorKind::kMalformedInput: return "MalformedInput";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kNotInSimplex: return "NotInSimplex";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kWeightMismatch: return "WeightMismatch";
    case ErrorKind::kZeroMassEvent: return "ZeroMassEvent";
    case ErrorKind::kNonConstantMass: return "NonConstantMass";
    case ErrorKind::kSupportViolation: return "SupportViolation";
    case ErrorKind::kDimensionDeficient: return "DimensionDeficient";
    case ErrorKind::kNonConstantCellMass: return "NonConstantCellMass";
    case ErrorKind::kNotFullSupport: return "NotFullSupport";
    case ErrorKind::kInconsistentExperiment: return "InconsistentExperiment";
    case ErrorKind::kZeroProbabilitySignal: return "ZeroProbabilitySignal";
    case ErrorKind::kFullDimensional: return "FullDimensional";
    case ErrorKind::kSignalMismatch: return "SignalMismatch";
    case ErrorKind::kNotPlausible: return "NotPlausible";
    case ErrorKind::kCellMismatch: return "CellMismatch";
    case ErrorKind::kNotMaximal: return "NotMaximal";
    case ErrorKind::kSupportTooLarge: return "SupportTooLarge";
    case ErrorKind::kIncompleteRule: return "IncompleteRule";
    case ErrorKind::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kUnknownLabel: return "UnknownLabel";
    case ErrorKind::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace partid
