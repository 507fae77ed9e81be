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

#include "demonwork/thermocycle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "demonwork/criteria.h"
#include "demonwork/workext.h"

namespace demonwork {

const char *to_string(CycleFamily family) {
    return family == CycleFamily::Classical ? "classical" : "entangled_pure";
}

double CycleReport::w_inv_closed_form() const {
    return family == CycleFamily::Classical ? h_joint - von_neumann : h_joint;
}

namespace {

CycleFamily family_of(const StateSpec &spec) {
    if (std::holds_alternative<ClassicalMix>(spec)) {
        return CycleFamily::Classical;
    }
    if (std::holds_alternative<PureSchmidt>(spec)) {
        return CycleFamily::EntangledPure;
    }
    throw OutOfModelError(
        "work balance is modelled only for classical_mix and pure_schmidt states");
}

}  // namespace

CycleReport cycle_balance(const StateSpec &spec, const BlochDirection &n) {
    const CycleFamily family = family_of(spec);
    const TwoQubitState rho = build_state(spec);
    const EntropyBundle e = entropy_bundle(joint_distribution(rho, n, n));

    CycleReport r{};
    r.family = family;
    r.h_joint = e.h_joint;
    r.extracted = 1.0 - e.h_a_given_b;
    r.erasure_cost = e.h_b;
    if (family == CycleFamily::Classical) {
        r.von_neumann = von_neumann_entropy(rho);
        r.compression_consumed = 1.0 - r.von_neumann / 2;
        r.decompression_gained = r.von_neumann / 2;
    } else {
        r.von_neumann = 0.0;
        r.compression_consumed = 1.0;
        r.decompression_gained = 0.0;
    }
    r.w_inv = r.compression_consumed - r.decompression_gained + r.erasure_cost - r.extracted;
    return r;
}

SecondLawScan second_law_scan(const StateSpec &spec, const SamplingPlan &plan) {
    family_of(spec);
    std::vector<BlochDirection> directions = plan.fixed;
    std::mt19937_64 rng(plan.seed);
    for (std::size_t i = 0; i < plan.random_count; ++i) {
        directions.push_back(random_direction(rng));
    }
    if (directions.empty()) {
        throw PreconditionError("second-law scan needs at least one direction");
    }
    SecondLawScan scan{std::numeric_limits<double>::infinity(), directions.front(), directions.size(), 0.0};
    for (const auto &n : directions) {
        CycleReport r = cycle_balance(spec, n);
        scan.max_expression_gap = std::max(scan.max_expression_gap, std::abs(r.w_inv - r.w_inv_closed_form()));
        if (r.w_inv < scan.min_w_inv) {
            scan.min_w_inv = r.w_inv;
            scan.argmin = n;
        }
    }
    return scan;
}

}  // namespace demonwork
