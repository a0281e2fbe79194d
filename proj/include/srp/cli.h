// Copyright 2026 The SRP Authors.
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

#ifndef SRP_CLI_H_
#define SRP_CLI_H_

#include <iosfwd>

namespace srp {

// Exit codes of the `srp` command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitUsageError = 2;

// Entry point of the `srp` command:
//   srp run   --config FILE [--seed N] [--output FILE] [--dump-runs FILE]
//             [--threads N]
//   srp sweep --config FILE [--seed N] [--output-dir DIR] [--threads N]
int CliMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace srp

#endif  // SRP_CLI_H_
