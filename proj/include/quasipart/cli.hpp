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

#ifndef QUASIPART_CLI_HPP_
#define QUASIPART_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace quasipart::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitResidual = 3;
inline constexpr int kExitIdentityViolation = 4;

inline constexpr const char* kSchemaVersion = "1";

// Runs one invocation. `args` excludes the program name. Payload goes to
// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// RFC 4180 field: quoted only when it contains a comma, quote or line break.
std::string csv_field(const std::string& field);

}  // namespace quasipart::cli

#endif  // QUASIPART_CLI_HPP_
