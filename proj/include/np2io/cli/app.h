// Copyright 2026 The np2io Authors
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

#ifndef NP2IO_CLI_APP_H_
#define NP2IO_CLI_APP_H_

#include <ostream>

namespace np2io::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Parses arguments and runs one command. Usage and configuration errors
// return 2, other failures 1.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace np2io::cli

#endif  // NP2IO_CLI_APP_H_
