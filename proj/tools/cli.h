// Copyright 2026 The ultragreed Authors.
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

#ifndef ULTRAGREED_TOOLS_CLI_H_
#define ULTRAGREED_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ultragreed/field.h"

namespace ultragreed::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Parses "p" or "p^n", with an optional comma-separated modulus
// "c0,c1,...,cn" overriding the built-in one.
Field ParseFieldFlag(const std::string& flag,
                     const std::optional<std::string>& modulus);

// Entry point of the `ultragreed` tool. Results go to `out`, diagnostics to
// `err`. Returns kExitOk, kExitDomain or kExitUsage.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace ultragreed::cli

#endif  // ULTRAGREED_TOOLS_CLI_H_
