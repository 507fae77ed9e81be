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

#include "demonwork/nelder_mead.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace demonwork {

NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double> &)> &f,
                                      std::vector<double> start, const NelderMeadOptions &options) {
    const std::size_t dim = start.size();
    NelderMeadResult result;
    auto eval = [&](const std::vector<double> &x) {
        ++result.evaluations;
        return f(x);
    };

    std::vector<std::vector<double>> simplex(dim + 1, start);
    for (std::size_t i = 0; i < dim; ++i) {
        simplex[i + 1][i] += options.initial_step;
    }
    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
        values[i] = eval(simplex[i]);
    }

    std::vector<std::size_t> order(dim + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    };
    auto along = [&](const std::vector<double> &centroid, const std::vector<double> &worst, double t) {
        std::vector<double> x(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            x[k] = centroid[k] + t * (worst[k] - centroid[k]);
        }
        return x;
    };

    while (true) {
        sort_simplex();
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[dim - 1];
        if (values[worst] - values[best] <= options.tolerance) {
            result.converged = true;
            break;
        }
        if (result.evaluations >= options.max_evaluations) {
            break;
        }

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) {
                centroid[k] += simplex[order[i]][k] / static_cast<double>(dim);
            }
        }

        auto reflected = along(centroid, simplex[worst], -1.0);
        double fr = eval(reflected);
        if (fr < values[best]) {
            auto expanded = along(centroid, simplex[worst], -2.0);
            double fe = eval(expanded);
            if (fe < fr) {
                simplex[worst] = std::move(expanded);
                values[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                values[worst] = fr;
            }
            continue;
        }
        if (fr < values[second_worst]) {
            simplex[worst] = std::move(reflected);
            values[worst] = fr;
            continue;
        }
        bool outside = fr < values[worst];
        auto contracted = along(centroid, simplex[worst], outside ? -0.5 : 0.5);
        double fc = eval(contracted);
        if (fc < (outside ? fr : values[worst])) {
            simplex[worst] = std::move(contracted);
            values[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == best) {
                continue;
            }
            for (std::size_t k = 0; k < dim; ++k) {
                simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
            }
            values[i] = eval(simplex[i]);
        }
    }

    sort_simplex();
    result.x = simplex[order.front()];
    result.value = values[order.front()];
    return result;
}

}  // namespace demonwork
