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

#ifndef DEMONWORK_CLI_SCANS_H
#define DEMONWORK_CLI_SCANS_H

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "demonwork/criteria.h"

namespace demonwork::cli {

inline constexpr const char *kCsvVersionLine = "# demonwork-csv v1";

enum class Figure3Family { Classical, Entangled };

struct Figure3Row {
    Figure3Family family;
    std::optional<double> phi;  ///< classical rows only
    double parameter;           ///< c0 for classical rows, alpha^2 for entangled rows
    WitnessVerdict verdict;
};

/// Maximized great-circle values for c0 |00><00| + (1 - c0)|phi phi><phi phi| at each phi
/// over an M-point c0 grid on [0, 1], followed by the M-point alpha^2 grid of
/// alpha|00> + beta|11>. Rows are ordered by (phi, c0) then alpha^2 regardless of workers.
std::vector<Figure3Row> figure3_rows(std::span<const double> phis, std::size_t grid,
                                     const CircleSearchOptions &options = {}, std::size_t workers = 1);
void write_figure3_csv(std::ostream &out, std::span<const Figure3Row> rows);

struct WernerRow {
    double p;
    double xi_bs;
    double closed_form;
    WitnessVerdict verdict;
    double chsh_m;
    bool chsh_violated;
    bool ppt_separable;
};

/// p = from, from + step, ... up to `to` (inclusive within 1e-9 of a step).
std::vector<WernerRow> werner_scan_rows(double from, double to, double step,
                                        std::size_t polar_nodes = kDefaultPolarNodes,
                                        std::size_t azimuthal_nodes = kDefaultAzimuthalNodes,
                                        std::size_t workers = 1);
void write_werner_csv(std::ostream &out, std::span<const WernerRow> rows);

/// Default phi set {0.2 pi, 0.4 pi, ..., pi}.
std::vector<double> default_figure3_phis();

}  // namespace demonwork::cli

#endif
