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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "demonwork/cli/scans.h"
#include "demonwork/criteria.h"
#include "demonwork/parallel.h"
#include "demonwork/protocol_sim.h"
#include "demonwork/thermocycle.h"

using namespace demonwork;

namespace {

struct Outcome {
    std::vector<std::string> failures;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            failures.push_back(what);
        }
    }
};

std::string num(double v, int digits = 10) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Runs body, checks the wall-clock budget, prints the line.
bool criterion(int id, const char *title, double budget_seconds, const std::function<void(Outcome &)> &body) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception &e) {
        o.failures.push_back(std::string("exception: ") + e.what());
    }
    double elapsed = seconds_since(start);
    o.require(elapsed < budget_seconds, "runtime " + num(elapsed, 4) + " s exceeds " + num(budget_seconds) + " s");
    bool ok = o.failures.empty();
    std::printf("AC%d %s  %s  [%s] (%.2f s)\n", id, ok ? "PASS" : "FAIL", title, o.detail.str().c_str(), elapsed);
    for (const auto &f : o.failures) {
        std::printf("    - %s\n", f.c_str());
    }
    std::fflush(stdout);
    return ok;
}

void ac1(Outcome &o) {
    auto frame = GreatCircleFrame::xz_plane();
    double value = xi_circle_average(zero_zero(), frame, frame, 1024);
    o.detail << "Xi(|00>)=" << num(value);
    o.require(std::abs(value - 0.8854) <= 5e-4, "Xi(|00>)=" + num(value) + " not within 5e-4 of 0.8854");
}

void ac2(Outcome &o) {
    double value = xi_bloch_sphere(zero_zero());
    double doubled = xi_bloch_sphere(zero_zero(), 2 * kDefaultPolarNodes, 2 * kDefaultAzimuthalNodes);
    double exact = 2.0 - 1.0 / std::numbers::ln2;
    o.detail << "Xi_BS(|00>)=" << num(value) << ", doubled nodes " << num(doubled) << ", 2-1/ln2=" << num(exact);
    o.require(std::abs(value - 0.5573) <= 5e-4, "Xi_BS(|00>) not within 5e-4 of 0.5573");
    o.require(std::abs(doubled - exact) <= 1e-6, "doubled-node value off 2-1/ln2 by " + num(doubled - exact));
}

// Finds the unique flag flip in a scan; returns false if there is none or more than one.
bool crossing(const std::vector<cli::WernerRow> &rows, const std::function<bool(const cli::WernerRow &)> &flag,
              double &below, double &above) {
    int flips = 0;
    for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
        if (flag(rows[k]) != flag(rows[k + 1])) {
            ++flips;
            below = rows[k].p;
            above = rows[k + 1].p;
        }
    }
    return flips == 1;
}

void ac3(Outcome &o) {
    double worst = 0.0;
    for (int k = 0; k <= 10; ++k) {
        double p = k / 10.0;
        double numeric = xi_bloch_sphere(build_state(Werner{p}));
        worst = std::max(worst, std::abs(numeric - werner_xi_closed_form(p)));
    }
    o.detail << "max |numeric-closed|=" << num(worst, 3);
    o.require(worst <= 1e-6, "numeric sphere average deviates from closed form by " + num(worst));

    auto rows = cli::werner_scan_rows(0.0, 1.0, 0.001, kDefaultPolarNodes, kDefaultAzimuthalNodes,
                                      default_worker_count());
    auto check = [&](const char *name, const std::function<bool(const cli::WernerRow &)> &flag, double lo,
                     double hi) {
        double below = 0.0;
        double above = 0.0;
        bool unique = crossing(rows, flag, below, above);
        o.detail << ", " << name << " in (" << num(below, 4) << ", " << num(above, 4) << ")";
        o.require(unique, std::string(name) + ": expected exactly one crossing");
        o.require(std::abs(below - lo) < 1e-9 && std::abs(above - hi) < 1e-9,
                  std::string(name) + " crossing not bracketed in (" + num(lo) + ", " + num(hi) + ")");
    };
    check("witness", [](const cli::WernerRow &r) { return r.verdict.entangled; }, 0.600, 0.601);
    check("CHSH", [](const cli::WernerRow &r) { return r.chsh_violated; }, 0.707, 0.708);
    check("PPT", [](const cli::WernerRow &r) { return !r.ppt_separable; }, 0.333, 0.334);
}

void ac4(Outcome &o) {
    auto rows = cli::figure3_rows(cli::default_figure3_phis(), 41, CircleSearchOptions{}, default_worker_count());
    std::size_t classical = 0;
    double classical_max = -1.0;
    std::vector<const cli::Figure3Row *> entangled;
    for (const auto &row : rows) {
        if (row.family == cli::Figure3Family::Classical) {
            ++classical;
            classical_max = std::max(classical_max, row.verdict.value);
        } else {
            entangled.push_back(&row);
        }
    }
    o.require(classical == 5 * 41, "expected 205 classical rows, got " + std::to_string(classical));
    o.require(entangled.size() == 41, "expected 41 entangled rows, got " + std::to_string(entangled.size()));
    o.detail << "classical max " << num(classical_max);
    o.require(classical_max <= 0.8854 + 1e-3, "classical row exceeds 0.8854+1e-3: " + num(classical_max));
    if (entangled.size() != 41) {
        return;
    }
    const std::size_t mid = 20;
    double peak = entangled[mid]->verdict.value;
    o.detail << ", peak at alpha^2=" << num(entangled[mid]->parameter, 4) << ": " << num(peak, 12);
    o.require(std::abs(entangled[mid]->parameter - 0.5) < 1e-12, "grid midpoint is not alpha^2=0.5");
    o.require(std::abs(peak - 2.0) <= 1e-6, "peak value " + num(peak) + " not within 1e-6 of 2");

    std::size_t first = mid;
    std::size_t last = mid;
    while (first > 0 && entangled[first - 1]->verdict.entangled) {
        --first;
    }
    while (last + 1 < entangled.size() && entangled[last + 1]->verdict.entangled) {
        ++last;
    }
    bool interval = entangled[mid]->verdict.entangled;
    for (std::size_t k = 0; k < entangled.size(); ++k) {
        if ((k < first || k > last) && entangled[k]->verdict.entangled) {
            interval = false;
        }
    }
    o.detail << ", entangled on [" << num(entangled[first]->parameter, 4) << ", "
             << num(entangled[last]->parameter, 4) << "]";
    o.require(interval, "entangled rows do not form one interval around alpha^2=0.5");
    for (std::size_t k = 1; k < mid; ++k) {
        o.require(entangled[k + 1]->verdict.value > entangled[k]->verdict.value,
                  "not increasing at alpha^2=" + num(entangled[k + 1]->parameter, 4));
    }
    for (std::size_t k = mid; k + 2 < entangled.size(); ++k) {
        o.require(entangled[k + 1]->verdict.value < entangled[k]->verdict.value,
                  "not decreasing at alpha^2=" + num(entangled[k + 1]->parameter, 4));
    }
}

void ac5(Outcome &o) {
    std::mt19937_64 rng(20260501);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    std::size_t gc_false = 0;
    std::size_t bs_false = 0;
    std::size_t dominance = 0;
    double worst_gap = -1e300;
    for (int trial = 0; trial < 500; ++trial) {
        auto d = random_separable_decomposition(rng, size(rng));
        auto rho = d.assemble();
        auto best = maximize_great_circle(rho);
        double threshold = great_circle_threshold();
        if (best.value - threshold > kDecisionTolerance) {
            ++gc_false;
        }
        if (witness_bloch_sphere(rho).entangled) {
            ++bs_false;
        }
        double average = xi_circle_average(rho, best.frame_a, best.frame_b);
        double bound = pcs_bound(d, best.frame_a);
        worst_gap = std::max(worst_gap, average - bound);
        if (average > bound + 1e-9) {
            ++dominance;
        }
    }
    o.detail << "false positives gc=" << gc_false << " bs=" << bs_false << ", max(avg-pcs)=" << num(worst_gap, 3);
    o.require(gc_false == 0, std::to_string(gc_false) + " great-circle false positives");
    o.require(bs_false == 0, std::to_string(bs_false) + " Bloch-sphere false positives");
    o.require(dominance == 0, std::to_string(dominance) + " pcs dominance violations");
}

void ac6(Outcome &o) {
    double min_w = 1e300;
    double gap = 0.0;
    std::size_t scans = 0;
    std::uint64_t seed = 600;
    auto record = [&](const StateSpec &spec) {
        auto scan = second_law_scan(spec, SamplingPlan{{BlochDirection::plus_z()}, 999, seed++});
        min_w = std::min(min_w, scan.min_w_inv);
        gap = std::max(gap, scan.max_expression_gap);
        ++scans;
    };
    for (int k = 0; k <= 10; ++k) {
        record(PureSchmidt{std::sqrt(k / 10.0)});
    }
    for (double c0 : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
        for (double phi : {0.2, 0.4, 0.6, 0.8, 1.0}) {
            record(ClassicalMix{c0, phi * std::numbers::pi});
        }
    }
    o.detail << scans << " states x 1000 directions, min W_inv=" << num(min_w, 6) << ", max expression gap="
             << num(gap, 3);
    o.require(min_w >= -1e-9, "W_inv minimum " + num(min_w) + " below -1e-9");
    o.require(gap <= 1e-10, "W_inv expressions differ by " + num(gap));
}

void ac7(Outcome &o) {
    std::vector<BlochDirection> z2{BlochDirection::plus_z(), BlochDirection::plus_z()};
    auto edge = chained_inequality(zero_zero(), z2, z2);
    o.require(std::abs(edge.lhs - edge.rhs) <= 1e-12, "edge lhs-rhs=" + num(edge.lhs - edge.rhs));

    std::vector<BlochDirection> alice{BlochDirection::in_xz_plane(0.0), BlochDirection::in_xz_plane(0.2)};
    std::vector<BlochDirection> bob{BlochDirection::in_xz_plane(0.1)};
    auto phi = chained_inequality(phi_plus(), alice, bob);
    double margin = phi.lhs - phi.rhs;
    o.require(phi.violated && margin > 0.05, "phi_plus margin " + num(margin));

    std::mt19937_64 rng(7007);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    std::uniform_int_distribution<std::size_t> length(1, 4);
    std::size_t violations = 0;
    double worst = -1e300;
    for (int trial = 0; trial < 200; ++trial) {
        auto rho = random_separable_decomposition(rng, size(rng)).assemble();
        std::size_t n = length(rng);
        std::vector<BlochDirection> a;
        std::vector<BlochDirection> b;
        for (std::size_t k = 0; k < n; ++k) {
            a.push_back(random_direction(rng));
            b.push_back(random_direction(rng));
        }
        auto r = chained_inequality(rho, a, b);
        worst = std::max(worst, r.lhs - r.rhs);
        violations += r.violated ? 1 : 0;
    }
    o.detail << "edge gap=" << num(edge.lhs - edge.rhs, 3) << ", phi_plus margin=" << num(margin, 6)
             << ", separable violations=" << violations << " (max lhs-rhs " << num(worst, 4) << ")";
    o.require(violations == 0, std::to_string(violations) + " separable chain violations");
}

std::string fingerprint(const SimResult &r) {
    std::ostringstream s;
    s << r.groups;
    for (const auto &p : r.pairs) {
        s << '|' << p.alice_index << ',' << p.bob_index << ',' << p.sample_count;
        for (auto c : p.counts_a_to_b) {
            s << ',' << c;
        }
        for (auto c : p.counts_b_to_a) {
            s << ',' << c;
        }
    }
    if (r.mean_work) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%a", *r.mean_work);
        s << '|' << buf;
    }
    return s.str();
}

void ac8(Outcome &o) {
    ProtocolConfig config;
    config.alice_bases = {BlochDirection::plus_z()};
    config.bob_bases = {BlochDirection::plus_z()};
    config.groups = 100000;
    config.seed = 42;
    auto werner = build_state(Werner{0.5});
    auto one = simulate(werner, config, SimOptions{1});
    auto eight = simulate(werner, config, SimOptions{8});
    double estimate = one.mean_work.value_or(-1.0);
    bool identical = fingerprint(one) == fingerprint(eight);
    o.require(std::abs(estimate - 0.377437) <= 0.02, "Werner(0.5) estimate " + num(estimate));
    o.require(identical, "1-thread and 8-thread runs differ");

    ProtocolConfig mixed = config;
    mixed.alice_bases = {BlochDirection::plus_z(), BlochDirection::plus_x()};
    mixed.bob_bases = {BlochDirection::plus_z(), BlochDirection::plus_x()};
    auto mixed_one = simulate(werner, mixed, SimOptions{1});
    auto mixed_eight = simulate(werner, mixed, SimOptions{8});
    o.require(fingerprint(mixed_one) == fingerprint(mixed_eight), "1-thread and 8-thread runs differ (two bases)");

    auto phi = simulate(phi_plus(), config, SimOptions{8});
    double phi_work = phi.mean_work.value_or(-1.0);
    o.require(phi_work == 2.0, "phi_plus gave " + num(phi_work, 17));
    o.detail << "Werner(0.5) estimate=" << num(estimate, 6) << ", phi_plus=" << num(phi_work, 17)
             << ", 1 vs 8 threads identical=" << (identical ? "yes" : "no");
}

}  // namespace

int main() {
    int failed = 0;
    failed += !criterion(1, "great-circle Xi(|00>)", 1.0, ac1);
    failed += !criterion(2, "Bloch-sphere Xi_BS(|00>)", 5.0, ac2);
    failed += !criterion(3, "Werner scan", 30.0, ac3);
    failed += !criterion(4, "two-family circle scan", 120.0, ac4);
    failed += !criterion(5, "separable decompositions", 300.0, ac5);
    failed += !criterion(6, "cycle work balance", 60.0, ac6);
    failed += !criterion(7, "chained inequality", 60.0, ac7);
    failed += !criterion(8, "protocol Monte Carlo", 60.0, ac8);
    std::printf("%d of 8 criteria passed\n", 8 - failed);
    return failed == 0 ? 0 : 1;
}
