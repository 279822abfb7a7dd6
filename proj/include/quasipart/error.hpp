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

#ifndef QUASIPART_ERROR_HPP_
#define QUASIPART_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quasipart {

enum class ErrorKind {
  kEmptySet,
  kNonPositivePart,
  kNegativeBound,
  kOracleBoundExceeded,
  kPartNotInSet,
  kPartExceedsN,
  kGcdNotOne,
  kResidualNonZero,
  kNonIntegerValue,
  kWrongCardinality,
  kBelowValidityBound,
  kInvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; kind() is the
// machine-readable discriminator.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// An over-determined interpolation sample did not lie on the fitted
// constituent.
class ResidualNonZeroError : public Error {
 public:
  ResidualNonZeroError(std::int64_t residue, std::int64_t sample,
                       const std::string& message);

  std::int64_t residue() const noexcept { return residue_; }
  std::int64_t sample() const noexcept { return sample_; }

 private:
  std::int64_t residue_;
  std::int64_t sample_;
};

}  // namespace quasipart

#endif  // QUASIPART_ERROR_HPP_
