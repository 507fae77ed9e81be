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

#include "demonwork/protocol_sim.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "demonwork/parallel.h"
#include "demonwork/workext.h"

namespace demonwork {

std::uint64_t SplitMix64::mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SplitMix64 SplitMix64::for_group(std::uint64_t seed, std::uint64_t group) {
    return SplitMix64(mix64(seed ^ mix64(group)));
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

double SplitMix64::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

namespace {

int sample_outcome(const std::array<double, 4> &p, double u) {
    double cumulative = 0;
    int last_nonzero = 0;
    for (int k = 0; k < 4; ++k) {
        if (p[k] > 0) {
            last_nonzero = k;
        }
        cumulative += p[k];
        if (u < cumulative) {
            return k;
        }
    }
    return last_nonzero;
}

double entropy_of_counts(std::span<const std::uint64_t> counts, std::uint64_t total, EntropyEstimator estimator) {
    double h = 0;
    int occupied = 0;
    for (std::uint64_t c : counts) {
        if (c > 0) {
            double f = static_cast<double>(c) / static_cast<double>(total);
            h -= f * std::log2(f);
            ++occupied;
        }
    }
    if (estimator == EntropyEstimator::MillerMadow) {
        h += (occupied - 1) / (2.0 * static_cast<double>(total) * std::numbers::ln2);
    }
    return h;
}

}  // namespace

double empirical_conditional_entropy(const std::array<std::uint64_t, 4> &counts, bool first_is_alice,
                                     EntropyEstimator estimator) {
    std::uint64_t total = counts[0] + counts[1] + counts[2] + counts[3];
    if (total == 0) {
        throw PreconditionError("conditional entropy of an empty sample");
    }
    std::array<std::uint64_t, 2> marginal = first_is_alice
                                                ? std::array<std::uint64_t, 2>{counts[0] + counts[1], counts[2] + counts[3]}
                                                : std::array<std::uint64_t, 2>{counts[0] + counts[2], counts[1] + counts[3]};
    double h = entropy_of_counts(counts, total, estimator) - entropy_of_counts(marginal, total, estimator);
    return std::max(0.0, h);
}

SimResult simulate(const TwoQubitState &rho, const ProtocolConfig &config, const SimOptions &options) {
    if (config.alice_bases.empty() || config.bob_bases.empty()) {
        throw PreconditionError("protocol needs at least one basis per party");
    }
    if (config.groups == 0) {
        throw PreconditionError("protocol needs at least one group");
    }
    const std::size_t na = config.alice_bases.size();
    const std::size_t nb = config.bob_bases.size();
    const std::size_t pair_count = na * nb;

    std::vector<std::array<double, 4>> tables(pair_count);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            tables[i * nb + j] = joint_distribution(rho, config.alice_bases[i], config.bob_bases[j]).table();
        }
    }

    struct Tally {
        std::vector<std::uint64_t> samples;
        std::vector<std::array<std::uint64_t, 4>> a_to_b;
        std::vector<std::array<std::uint64_t, 4>> b_to_a;
    };
    const std::size_t chunks = std::clamp<std::size_t>(options.workers, 1, config.groups);
    std::vector<Tally> tallies(chunks);
    parallel_for(chunks, chunks, [&](std::size_t c) {
        Tally &t = tallies[c];
        t.samples.assign(pair_count, 0);
        t.a_to_b.assign(pair_count, {0, 0, 0, 0});
        t.b_to_a.assign(pair_count, {0, 0, 0, 0});
        const std::uint64_t begin = config.groups * c / chunks;
        const std::uint64_t end = config.groups * (c + 1) / chunks;
        for (std::uint64_t g = begin; g < end; ++g) {
            SplitMix64 rng = SplitMix64::for_group(config.seed, g);
            auto pair = std::min<std::size_t>(static_cast<std::size_t>(rng.next_unit() * pair_count), pair_count - 1);
            const auto &p = tables[pair];
            ++t.samples[pair];
            ++t.a_to_b[pair][sample_outcome(p, rng.next_unit())];
            ++t.b_to_a[pair][sample_outcome(p, rng.next_unit())];
        }
    });

    SimResult result;
    result.groups = config.groups;
    double weighted = 0;
    std::uint64_t weighted_samples = 0;
    for (std::size_t k = 0; k < pair_count; ++k) {
        PairResult r{k / nb, k % nb, 0, {0, 0, 0, 0}, {0, 0, 0, 0}, std::nullopt, std::nullopt, std::nullopt};
        for (const Tally &t : tallies) {
            r.sample_count += t.samples[k];
            for (int o = 0; o < 4; ++o) {
                r.counts_a_to_b[o] += t.a_to_b[k][o];
                r.counts_b_to_a[o] += t.b_to_a[k][o];
            }
        }
        if (r.sample_count > 0) {
            r.h_b_given_a = empirical_conditional_entropy(r.counts_a_to_b, true, options.estimator);
            r.h_a_given_b = empirical_conditional_entropy(r.counts_b_to_a, false, options.estimator);
            r.work_estimate = std::clamp(2.0 - *r.h_b_given_a - *r.h_a_given_b, 0.0, 2.0);
            weighted += *r.work_estimate * static_cast<double>(r.sample_count);
            weighted_samples += r.sample_count;
        }
        result.pairs.push_back(r);
    }
    if (weighted_samples > 0) {
        result.mean_work = weighted / static_cast<double>(weighted_samples);
    }
    return result;
}

std::vector<ConvergencePoint> convergence_curve(const TwoQubitState &rho, const BlochDirection &n_a,
                                                const BlochDirection &n_b, std::span<const std::uint64_t> schedule,
                                                std::uint64_t seed, const SimOptions &options) {
    if (schedule.empty()) {
        throw PreconditionError("convergence schedule is empty");
    }
    for (std::size_t i = 1; i < schedule.size(); ++i) {
        if (schedule[i] <= schedule[i - 1]) {
            throw PreconditionError("convergence schedule must be strictly increasing");
        }
    }
    const double analytic = xi(rho, n_a, n_b);
    std::vector<ConvergencePoint> curve;
    for (std::uint64_t groups : schedule) {
        ProtocolConfig config{{n_a}, {n_b}, groups, seed};
        double estimate = *simulate(rho, config, options).pairs.front().work_estimate;
        curve.push_back(ConvergencePoint{groups, estimate, std::abs(estimate - analytic)});
    }
    return curve;
}

}  // namespace demonwork
