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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "demonwork/errors.h"
#include "demonwork/nelder_mead.h"

using namespace demonwork;

TEST(GaussLegendre, two_point_rule) {
    const auto &rule = gauss_legendre(2);
    EXPECT_NEAR(rule.nodes[0], -1 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(rule.nodes[1], 1 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(rule.weights[0], 1.0, 1e-15);
}

TEST(GaussLegendre, exact_for_polynomials) {
    for (std::size_t n : {3u, 16u, 128u, 256u}) {
        const auto &rule = gauss_legendre(n);
        double weight_sum = 0;
        for (double w : rule.weights) {
            weight_sum += w;
        }
        EXPECT_NEAR(weight_sum, 2.0, 1e-13);
        for (int degree = 0; degree <= static_cast<int>(std::min<std::size_t>(2 * n - 1, 30)); ++degree) {
            double integral = 0;
            for (std::size_t i = 0; i < n; ++i) {
                integral += rule.weights[i] * std::pow(rule.nodes[i], degree);
            }
            double exact = degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
            EXPECT_NEAR(integral, exact, 1e-13) << "n=" << n << " degree=" << degree;
        }
        for (std::size_t i = 1; i < n; ++i) {
            EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
        }
    }
    EXPECT_THROW(gauss_legendre(0), ConfigError);
}

TEST(CompensatedSum, recovers_small_terms) {
    CompensatedSum s;
    s.add(1.0);
    for (int i = 0; i < 1000; ++i) {
        s.add(1e-16);
    }
    s.add(-1.0);
    EXPECT_NEAR(s.value(), 1e-13, 1e-20);
}

TEST(NelderMead, finds_quadratic_minimum) {
    auto r = nelder_mead_minimize(
        [](const std::vector<double> &x) { return (x[0] - 1.5) * (x[0] - 1.5) + 3 * (x[1] + 0.5) * (x[1] + 0.5); },
        {0.0, 0.0}, NelderMeadOptions{0.2, 1e-14, 2000});
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.x[0], 1.5, 1e-5);
    EXPECT_NEAR(r.x[1], -0.5, 1e-5);
}

TEST(NelderMead, reports_budget_exhaustion) {
    auto r = nelder_mead_minimize(
        [](const std::vector<double> &x) {
            double a = 1 - x[0];
            double b = x[1] - x[0] * x[0];
            return a * a + 100 * b * b;
        },
        {-1.2, 1.0}, NelderMeadOptions{0.1, 1e-30, 40});
    EXPECT_FALSE(r.converged);
    EXPECT_LE(r.evaluations, 40 + 3);
}
