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

#ifndef PARTID_CLI_HPP_
#define PARTID_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace partid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitMalformed = 2;

// `args` excludes the program name. The result document (or an error
// document) goes to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Subcommand names, in help order.
const std::vector<std::string>& Commands();

}  // namespace partid::cli

#endif  // PARTID_CLI_HPP_
