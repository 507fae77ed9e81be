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

#include "demonwork/cli/scans.h"

#include <cmath>
#include <numbers>

#include "demonwork/cli/numeric_text.h"
#include "demonwork/parallel.h"

namespace demonwork::cli {

std::vector<double> default_figure3_phis() {
    std::vector<double> phis;
    for (int k = 1; k <= 5; ++k) {
        phis.push_back(0.2 * k * std::numbers::pi);
    }
    return phis;
}

std::vector<Figure3Row> figure3_rows(std::span<const double> phis, std::size_t grid,
                                     const CircleSearchOptions &options, std::size_t workers) {
    if (grid < 2) {
        throw ConfigError("figure grid needs at least 2 points");
    }
    if (phis.empty()) {
        throw ConfigError("figure needs at least one phi value");
    }
    for (double phi : phis) {
        if (!(phi > 0 && phi <= std::numbers::pi + 1e-12)) {
            throw ConfigError("phi values must lie in (0, pi]");
        }
    }
    auto grid_point = [grid](std::size_t k) {
        return k + 1 == grid ? 1.0 : static_cast<double>(k) / static_cast<double>(grid - 1);
    };

    std::vector<Figure3Row> rows;
    for (double phi : phis) {
        for (std::size_t k = 0; k < grid; ++k) {
            rows.push_back(Figure3Row{Figure3Family::Classical, phi, grid_point(k), {}});
        }
    }
    for (std::size_t k = 0; k < grid; ++k) {
        rows.push_back(Figure3Row{Figure3Family::Entangled, std::nullopt, grid_point(k), {}});
    }

    const double threshold = great_circle_threshold(options.nodes);
    parallel_for(rows.size(), workers, [&](std::size_t i) {
        Figure3Row &row = rows[i];
        StateSpec spec = row.family == Figure3Family::Classical
                             ? StateSpec(ClassicalMix{row.parameter, *row.phi})
                             : StateSpec(PureSchmidt{std::sqrt(row.parameter)});
        double value = maximize_great_circle(build_state(spec), options).value;
        double margin = value - threshold;
        row.verdict = WitnessVerdict{value, threshold, margin, margin > kDecisionTolerance};
    });
    return rows;
}

void write_figure3_csv(std::ostream &out, std::span<const Figure3Row> rows) {
    out << kCsvVersionLine << "\n";
    out << "family,phi,parameter,xi,threshold,margin,entangled\n";
    for (const auto &row : rows) {
        out << (row.family == Figure3Family::Classical ? "classical" : "entangled") << ","
            << (row.phi ? format_fixed6(*row.phi) : "") << "," << format_fixed6(row.parameter) << ","
            << format_fixed6(row.verdict.value) << "," << format_fixed6(row.verdict.threshold) << ","
            << format_fixed6(row.verdict.margin) << "," << (row.verdict.entangled ? 1 : 0) << "\n";
    }
}

std::vector<WernerRow> werner_scan_rows(double from, double to, double step, std::size_t polar_nodes,
                                        std::size_t azimuthal_nodes, std::size_t workers) {
    if (!(from >= 0 && from < to && to <= 1)) {
        throw ConfigError("werner scan needs 0 <= from < to <= 1");
    }
    if (!(step > 0)) {
        throw ConfigError("werner scan step must be positive");
    }
    const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
    std::vector<WernerRow> rows(count);
    const double threshold = bloch_sphere_threshold(polar_nodes, azimuthal_nodes);
    parallel_for(count, workers, [&](std::size_t k) {
        double p = std::min(to, from + static_cast<double>(k) * step);
        auto rho = build_state(Werner{p});
        WernerRow &row = rows[k];
        row.p = p;
        row.xi_bs = xi_bloch_sphere(rho, polar_nodes, azimuthal_nodes);
        row.closed_form = werner_xi_closed_form(p);
        double margin = row.xi_bs - threshold;
        row.verdict = WitnessVerdict{row.xi_bs, threshold, margin, margin > kDecisionTolerance};
        row.chsh_m = chsh_horodecki(rho);
        row.chsh_violated = row.chsh_m > 1.0 + kChshTolerance;
        row.ppt_separable = ppt_separable(rho);
    });
    return rows;
}

void write_werner_csv(std::ostream &out, std::span<const WernerRow> rows) {
    out << kCsvVersionLine << "\n";
    out << "p,xi_bs,closed_form,threshold,margin,entangled,chsh_m,chsh_violated,ppt_separable\n";
    for (const auto &row : rows) {
        out << format_fixed6(row.p) << "," << format_fixed6(row.xi_bs) << "," << format_fixed6(row.closed_form) << ","
            << format_fixed6(row.verdict.threshold) << "," << format_fixed6(row.verdict.margin) << ","
            << (row.verdict.entangled ? 1 : 0) << "," << format_fixed6(row.chsh_m) << ","
            << (row.chsh_violated ? 1 : 0) << "," << (row.ppt_separable ? 1 : 0) << "\n";
    }
}

}  // namespace demonwork::cli
