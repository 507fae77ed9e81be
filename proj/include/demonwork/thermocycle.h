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

#ifndef DEMONWORK_THERMOCYCLE_H
#define DEMONWORK_THERMOCYCLE_H

#include <cstdint>
#include <vector>

#include "demonwork/qcore.h"

namespace demonwork {

enum class CycleFamily { Classical, EntangledPure };

const char *to_string(CycleFamily family);

/// Work ledger (bits) for one extract-and-restore cycle with both parties measuring along
/// the same direction. Bob measures and erases his record; Alice extracts.
struct CycleReport {
    CycleFamily family;
    double extracted;             ///< 1 - H(A|B)
    double erasure_cost;          ///< H(B)
    double compression_consumed;  ///< Alice's isothermal compression
    double decompression_gained;  ///< Bob's expansion of |0> to I/2
    double w_inv;                 ///< consumed - gained + erasure - extracted
    double h_joint;               ///< H(A, B) along the measurement direction
    double von_neumann;           ///< S(rho)
    /// H(A,B) - S(rho) for Classical, H(A,B) for EntangledPure.
    double w_inv_closed_form() const;
};

/// ClassicalMix and PureSchmidt only. Any other family throws OutOfModelError.
CycleReport cycle_balance(const StateSpec &spec, const BlochDirection &n);

struct SamplingPlan {
    std::vector<BlochDirection> fixed;  ///< always evaluated first
    std::size_t random_count = 0;       ///< plus this many uniform directions
    std::uint64_t seed = 0;
};

struct SecondLawScan {
    double min_w_inv;
    BlochDirection argmin;
    std::size_t directions;
    /// Largest |w_inv - w_inv_closed_form()| seen.
    double max_expression_gap;
};

SecondLawScan second_law_scan(const StateSpec &spec, const SamplingPlan &plan);

}  // namespace demonwork

#endif
