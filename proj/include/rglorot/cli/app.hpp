// Copyright 2026 The rglorot Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rglorot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "RGLOROT_OUT_DIR";

/// Entry point of the `rglorot` tool. `args` excludes the program name.
/// Errors go to `err` as one line of JSON; the return value is the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace rglorot::cli
