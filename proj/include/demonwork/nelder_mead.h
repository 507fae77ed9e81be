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

#ifndef DEMONWORK_NELDER_MEAD_H
#define DEMONWORK_NELDER_MEAD_H

#include <functional>
#include <vector>

namespace demonwork {

struct NelderMeadOptions {
    double initial_step = 0.1;
    /// Stop when max |f(vertex) - f(best)| falls below this.
    double tolerance = 1e-7;
    int max_evaluations = 500;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    int evaluations = 0;
    bool converged = false;
};

/// Derivative-free minimization with the standard reflection / expansion / contraction /
/// shrink coefficients (1, 2, 1/2, 1/2).
NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double> &)> &f,
                                      std::vector<double> start, const NelderMeadOptions &options = {});

}  // namespace demonwork

#endif
