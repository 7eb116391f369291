// Copyright 2026 The pjpeg Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PJPEG_TOOLS_CLI_H_
#define PJPEG_TOOLS_CLI_H_

#include <ostream>

namespace pjpeg::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitOverBudget = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitIo = 74;

// Entry point of the pjpeg tool: encode, compare and distance subcommands.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace pjpeg::cli

#endif  // PJPEG_TOOLS_CLI_H_
