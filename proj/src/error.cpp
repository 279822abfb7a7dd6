// Copyright 2026 The quasipart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quasipart/error.hpp"

namespace quasipart {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptySet: return "EmptySet";
    case ErrorKind::kNonPositivePart: return "NonPositivePart";
    case ErrorKind::kNegativeBound: return "NegativeBound";
    case ErrorKind::kOracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorKind::kPartNotInSet: return "PartNotInSet";
    case ErrorKind::kPartExceedsN: return "PartExceedsN";
    case ErrorKind::kGcdNotOne: return "GcdNotOne";
    case ErrorKind::kResidualNonZero: return "ResidualNonZero";
    case ErrorKind::kNonIntegerValue: return "NonIntegerValue";
    case ErrorKind::kWrongCardinality: return "WrongCardinality";
    case ErrorKind::kBelowValidityBound: return "BelowValidityBound";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

ResidualNonZeroError::ResidualNonZeroError(std::int64_t residue,
                                           std::int64_t sample,
                                           const std::string& message)
    : Error(ErrorKind::kResidualNonZero, message),
      residue_(residue),
      sample_(sample) {}

}  // namespace quasipart
