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

#include "demonwork/quadrature.h"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "demonwork/errors.h"

namespace demonwork {

void CompensatedSum::add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        correction_ += (sum_ - t) + x;
    } else {
        correction_ += (x - t) + sum_;
    }
    sum_ = t;
}

namespace {

GaussLegendreRule compute_rule(std::size_t n) {
    GaussLegendreRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double derivative = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            derivative = n * (z * p1 - p2) / (z * z - 1.0);
            double step = p1 / derivative;
            z -= step;
            if (std::abs(step) < 1e-15) {
                break;
            }
        }
        // Recompute the derivative at the converged root for the weight.
        double p1 = 1.0;
        double p2 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double p3 = p2;
            p2 = p1;
            p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
        }
        derivative = n * (z * p1 - p2) / (z * z - 1.0);
        double w = 2.0 / ((1.0 - z * z) * derivative * derivative);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussLegendreRule &gauss_legendre(std::size_t n) {
    if (n == 0) {
        throw ConfigError("Gauss-Legendre rule needs at least one node");
    }
    static std::mutex mutex;
    static std::map<std::size_t, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto &slot = cache[n];
    if (!slot) {
        slot = std::make_unique<GaussLegendreRule>(compute_rule(n));
    }
    return *slot;
}

}  // namespace demonwork
