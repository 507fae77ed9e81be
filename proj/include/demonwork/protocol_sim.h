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

#ifndef DEMONWORK_PROTOCOL_SIM_H
#define DEMONWORK_PROTOCOL_SIM_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "demonwork/qcore.h"

namespace demonwork {

/// Counter-style SplitMix64 stream. Group g of a run with seed s draws from the stream
/// whose initial state is mix64(s ^ mix64(g)), so any partition of the groups over
/// threads reproduces the serial run bit for bit.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {
    }
    static std::uint64_t mix64(std::uint64_t z);
    static SplitMix64 for_group(std::uint64_t seed, std::uint64_t group);

    std::uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double next_unit();

   private:
    std::uint64_t state_;
};

struct ProtocolConfig {
    std::vector<BlochDirection> alice_bases;
    std::vector<BlochDirection> bob_bases;
    std::uint64_t groups = 0;
    std::uint64_t seed = 0;
};

enum class EntropyEstimator { PlugIn, MillerMadow };

struct SimOptions {
    std::size_t workers = 1;
    EntropyEstimator estimator = EntropyEstimator::PlugIn;
};

/// Outcome counts are indexed 2a + b (a = Alice's outcome, b = Bob's).
struct PairResult {
    std::size_t alice_index;
    std::size_t bob_index;
    std::uint64_t sample_count;
    std::array<std::uint64_t, 4> counts_a_to_b;  ///< Alice measured, Bob extracts
    std::array<std::uint64_t, 4> counts_b_to_a;  ///< Bob measured, Alice extracts
    /// All absent when sample_count == 0.
    std::optional<double> h_b_given_a;
    std::optional<double> h_a_given_b;
    std::optional<double> work_estimate;
};

struct SimResult {
    std::uint64_t groups;
    std::vector<PairResult> pairs;  ///< row-major over (alice_index, bob_index)
    /// Sample-weighted mean of the present pairs' estimates.
    std::optional<double> mean_work;
};

/// Each group picks a basis pair uniformly, then draws two independent outcome pairs
/// from the Born-rule joint distribution: one scored with Alice measuring, one with Bob
/// measuring. Throws PreconditionError on empty basis lists or zero groups.
SimResult simulate(const TwoQubitState &rho, const ProtocolConfig &config, const SimOptions &options = {});

/// Empirical conditional entropy H(second | first) in bits. `first_is_alice` picks which
/// index of the 2a+b layout is conditioned on.
double empirical_conditional_entropy(const std::array<std::uint64_t, 4> &counts, bool first_is_alice,
                                     EntropyEstimator estimator = EntropyEstimator::PlugIn);

struct ConvergencePoint {
    std::uint64_t groups;
    double estimate;
    double deviation;  ///< |estimate - analytic xi|
};

/// One run per schedule entry, all with the same seed; the schedule must be increasing.
std::vector<ConvergencePoint> convergence_curve(const TwoQubitState &rho, const BlochDirection &n_a,
                                                const BlochDirection &n_b, std::span<const std::uint64_t> schedule,
                                                std::uint64_t seed, const SimOptions &options = {});

}  // namespace demonwork

#endif
