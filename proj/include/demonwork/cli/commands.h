// Copyright 2026 The demonwork Authors
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

#ifndef DEMONWORK_CLI_COMMANDS_H
#define DEMONWORK_CLI_COMMANDS_H

#include <ostream>
#include <string>
#include <vector>

namespace demonwork::cli {

// Process exit codes. Stable; scripts branch on them.
inline constexpr int kExitOk = 0;           ///< success; for `witness`: separability not excluded
inline constexpr int kExitInputError = 1;   ///< usage, malformed file, invalid state or parameters
inline constexpr int kExitOutOfModel = 2;   ///< valid input the requested model does not cover
inline constexpr int kExitEntangled = 3;    ///< `witness` certified entanglement

/// Entry point shared by the executable and the tests. args[0] is the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace demonwork::cli

#endif
