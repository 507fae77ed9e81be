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

#ifndef DEMONWORK_CLI_STATE_IO_H
#define DEMONWORK_CLI_STATE_IO_H

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "demonwork/qcore.h"

namespace demonwork::cli {

/// Schema violation in a state file. what() starts with the JSON pointer of the
/// offending value, e.g. "/matrix/2/3: expected [re, im] pair".
class StateFileError : public std::runtime_error {
   public:
    StateFileError(const std::string &path, const std::string &message)
        : std::runtime_error(path + ": " + message), path_(path) {
    }
    const std::string &path() const {
        return path_;
    }

   private:
    std::string path_;
};

/// {"family": "werner", "p": ...}
/// {"family": "pure_schmidt", "alpha": ...} or {"family": "pure_schmidt", "alpha_sq": ...}
/// {"family": "classical_mix", "c0": ..., "phi": number | "0.6pi"}
/// {"family": "dense", "matrix": [[[re, im] x 4] x 4]}
StateSpec parse_state(const nlohmann::json &doc);

/// Inverse of parse_state. Doubles are written with round-trip precision.
nlohmann::json state_to_json(const StateSpec &spec);
/// Dense form of any spec: the built matrix as [re, im] pairs.
nlohmann::json dense_state_json(const StateSpec &spec);

/// Resolves a command-line state argument: a preset name (phi_plus, singlet, zero_zero,
/// maximally_mixed), inline JSON starting with '{', "-" for stdin, or a file path.
StateSpec load_state_argument(const std::string &argument);

}  // namespace demonwork::cli

#endif
