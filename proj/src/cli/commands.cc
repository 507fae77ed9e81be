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

#include "demonwork/cli/commands.h"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <numbers>

#include "demonwork/cli/numeric_text.h"
#include "demonwork/cli/scans.h"
#include "demonwork/cli/state_io.h"
#include "demonwork/criteria.h"
#include "demonwork/parallel.h"
#include "demonwork/protocol_sim.h"
#include "demonwork/thermocycle.h"

namespace demonwork::cli {

using nlohmann::json;

namespace {

json vector_json(const Vector3 &v) {
    return json::array({v.x(), v.y(), v.z()});
}

json frame_json(const GreatCircleFrame &f) {
    return json{{"u", vector_json(f.u().vector())}, {"v", vector_json(f.v().vector())}};
}

json optional_json(const std::optional<double> &v) {
    return v ? json(*v) : json(nullptr);
}

BlochDirection parse_direction(const std::string &text) {
    auto parts = parse_number_list(text);
    if (parts.size() != 3) {
        throw ParseError("direction needs three comma-separated components: '" + text + "'");
    }
    return BlochDirection::normalized(Vector3(parts[0], parts[1], parts[2]));
}

std::vector<BlochDirection> directions_from_json(const json &doc, const std::string &key) {
    if (!doc.contains(key)) {
        return {BlochDirection::plus_z()};
    }
    const json &list = doc.at(key);
    if (!list.is_array() || list.empty()) {
        throw StateFileError("/" + key, "expected a nonempty array of [x, y, z] directions");
    }
    std::vector<BlochDirection> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const json &v = list[i];
        if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() || !v[2].is_number()) {
            throw StateFileError("/" + key + "/" + std::to_string(i), "expected [x, y, z]");
        }
        out.push_back(BlochDirection::normalized(Vector3(v[0].get<double>(), v[1].get<double>(), v[2].get<double>())));
    }
    return out;
}

class OutputTarget {
   public:
    OutputTarget(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw ParseError("cannot open output file '" + path + "'");
            }
            stream_ = &file_;
        }
    }
    std::ostream &stream() {
        return *stream_;
    }

   private:
    std::ofstream file_;
    std::ostream *stream_;
};

struct Options {
    std::string state;
    std::string method = "bs";
    std::size_t nodes = kDefaultCircleNodes;
    std::size_t polar_nodes = kDefaultPolarNodes;
    std::size_t azimuthal_nodes = kDefaultAzimuthalNodes;
    bool independent_frames = false;
    std::string phis;
    std::size_t grid = 41;
    double from = 0.0;
    double to = 1.0;
    double step = 0.001;
    std::string direction = "0,0,1";
    std::string config;
    std::optional<std::uint64_t> groups;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> threads;
    std::string estimator = "plug-in";
    std::string angles;
    bool dense = false;
    std::string out_path;
};

int cmd_witness(const Options &o, std::ostream &out) {
    auto rho = build_state(load_state_argument(o.state));
    json doc;
    WitnessVerdict verdict{};
    if (o.method == "gc") {
        CircleSearchOptions search;
        search.nodes = o.nodes;
        search.independent_frames = o.independent_frames;
        auto best = maximize_great_circle(rho, search);
        double threshold = great_circle_threshold(o.nodes);
        verdict = WitnessVerdict{best.value, threshold, best.value - threshold,
                                 best.value - threshold > kDecisionTolerance};
        doc["nodes"] = o.nodes;
        doc["frame_a"] = frame_json(best.frame_a);
        doc["frame_b"] = frame_json(best.frame_b);
        doc["converged"] = best.converged;
        doc["evaluations"] = best.evaluations;
    } else {
        verdict = witness_bloch_sphere(rho, o.polar_nodes, o.azimuthal_nodes);
        doc["polar_nodes"] = o.polar_nodes;
        doc["azimuthal_nodes"] = o.azimuthal_nodes;
    }
    doc["method"] = o.method;
    doc["value"] = verdict.value;
    doc["threshold"] = verdict.threshold;
    doc["margin"] = verdict.margin;
    doc["entangled"] = verdict.entangled;
    out << doc.dump(2) << "\n";
    return verdict.entangled ? kExitEntangled : kExitOk;
}

int cmd_figure3(const Options &o, std::ostream &out, std::size_t workers) {
    std::vector<double> phis = o.phis.empty() ? default_figure3_phis() : parse_angle_list(o.phis);
    CircleSearchOptions search;
    search.nodes = o.nodes;
    auto rows = figure3_rows(phis, o.grid, search, workers);
    OutputTarget target(o.out_path, out);
    write_figure3_csv(target.stream(), rows);
    return kExitOk;
}

int cmd_werner_scan(const Options &o, std::ostream &out, std::size_t workers) {
    auto rows = werner_scan_rows(o.from, o.to, o.step, o.polar_nodes, o.azimuthal_nodes, workers);
    OutputTarget target(o.out_path, out);
    write_werner_csv(target.stream(), rows);
    return kExitOk;
}

int cmd_cycle(const Options &o, std::ostream &out) {
    auto spec = load_state_argument(o.state);
    auto n = parse_direction(o.direction);
    auto r = cycle_balance(spec, n);
    json doc{{"family", to_string(r.family)},
             {"direction", vector_json(n.vector())},
             {"extracted", r.extracted},
             {"erasure_cost", r.erasure_cost},
             {"compression_consumed", r.compression_consumed},
             {"decompression_gained", r.decompression_gained},
             {"h_joint", r.h_joint},
             {"von_neumann", r.von_neumann},
             {"w_inv", r.w_inv},
             {"w_inv_closed_form", r.w_inv_closed_form()}};
    out << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_simulate(const Options &o, std::ostream &out, std::size_t workers) {
    auto rho = build_state(load_state_argument(o.state));
    json cfg = json::object();
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) {
            throw ParseError("cannot open config file '" + o.config + "'");
        }
        try {
            cfg = json::parse(in);
        } catch (const json::parse_error &e) {
            throw StateFileError("", std::string("malformed config JSON: ") + e.what());
        }
        if (!cfg.is_object()) {
            throw StateFileError("", "config must be a JSON object");
        }
    }
    ProtocolConfig config;
    config.alice_bases = directions_from_json(cfg, "alice_bases");
    config.bob_bases = directions_from_json(cfg, "bob_bases");
    config.groups = cfg.value("groups", std::uint64_t{100000});
    config.seed = cfg.value("seed", std::uint64_t{0});
    if (o.groups) {
        config.groups = *o.groups;
    }
    if (o.seed) {
        config.seed = *o.seed;
    }
    SimOptions options;
    options.workers = workers;
    if (o.estimator == "miller-madow") {
        options.estimator = EntropyEstimator::MillerMadow;
    }
    auto result = simulate(rho, config, options);

    json pairs = json::array();
    for (const auto &p : result.pairs) {
        pairs.push_back(json{
            {"alice_index", p.alice_index},
            {"bob_index", p.bob_index},
            {"sample_count", p.sample_count},
            {"counts_a_to_b", p.counts_a_to_b},
            {"counts_b_to_a", p.counts_b_to_a},
            {"h_b_given_a", optional_json(p.h_b_given_a)},
            {"h_a_given_b", optional_json(p.h_a_given_b)},
            {"work_estimate", optional_json(p.work_estimate)},
            {"analytic_xi", xi(rho, config.alice_bases[p.alice_index], config.bob_bases[p.bob_index])},
        });
    }
    json doc{{"groups", result.groups},
             {"seed", config.seed},
             {"estimator", o.estimator},
             {"rng", "splitmix64-per-group"},
             {"pairs", pairs},
             {"mean_work", optional_json(result.mean_work)}};
    out << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_chained(const Options &o, std::ostream &out) {
    auto rho = build_state(load_state_argument(o.state));
    auto angles = parse_angle_list(o.angles);
    std::vector<BlochDirection> alice;
    std::vector<BlochDirection> bob;
    for (std::size_t k = 0; k < angles.size(); ++k) {
        (k % 2 == 0 ? alice : bob).push_back(BlochDirection::in_xz_plane(angles[k]));
    }
    auto r = chained_inequality(rho, alice, bob);
    json doc{{"n", r.n},
             {"directions", angles.size()},
             {"lhs", r.lhs},
             {"rhs", r.rhs},
             {"margin", r.lhs - r.rhs},
             {"violated", r.violated}};
    out << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_dump_state(const Options &o, std::ostream &out) {
    auto spec = load_state_argument(o.state);
    build_state(spec);
    out << (o.dense ? dense_state_json(spec) : state_to_json(spec)).dump() << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Thermodynamic separability witnesses for two-qubit states", "demonwork"};
    app.require_subcommand(0, 1);
    Options o;
    std::string dump_argument;

    const std::string state_help =
        "State: JSON file, inline JSON, '-' for stdin, or a preset (phi_plus, singlet, zero_zero, "
        "maximally_mixed)";

    auto *witness = app.add_subcommand("witness", "Evaluate a separability witness; exit 3 if entangled");
    witness->add_option("state", o.state, state_help)->required();
    witness->add_option("--method", o.method, "gc (great circle) or bs (Bloch sphere)")
        ->check(CLI::IsMember({"gc", "bs"}));
    witness->add_option("--nodes", o.nodes, "Great-circle quadrature nodes");
    witness->add_option("--polar-nodes", o.polar_nodes, "Gauss-Legendre nodes in cos(polar)");
    witness->add_option("--azimuthal-nodes", o.azimuthal_nodes, "Trapezoid nodes in azimuth");
    witness->add_flag("--independent-frames", o.independent_frames,
                      "Optimize separate circles for Alice and Bob (gc only)");

    auto *figure3 = app.add_subcommand("figure3", "CSV of maximized circle values for the two state families");
    figure3->add_option("--phis", o.phis, "Comma-separated phi values (pi shorthand allowed)");
    figure3->add_option("--grid", o.grid, "Grid points on [0, 1]");
    figure3->add_option("--nodes", o.nodes, "Great-circle quadrature nodes");
    figure3->add_option("--out", o.out_path, "Write CSV here instead of stdout");

    auto *werner = app.add_subcommand("werner-scan", "CSV of Werner-state witnesses against p");
    werner->add_option("--from", o.from, "First p");
    werner->add_option("--to", o.to, "Last p");
    werner->add_option("--step", o.step, "Step in p");
    werner->add_option("--polar-nodes", o.polar_nodes, "Gauss-Legendre nodes in cos(polar)");
    werner->add_option("--azimuthal-nodes", o.azimuthal_nodes, "Trapezoid nodes in azimuth");
    werner->add_option("--out", o.out_path, "Write CSV here instead of stdout");

    auto *cycle = app.add_subcommand("cycle", "Work balance of the extract-and-restore cycle");
    cycle->add_option("state", o.state, state_help)->required();
    cycle->add_option("--direction", o.direction, "Measurement direction x,y,z (normalized)");

    auto *simulate_cmd = app.add_subcommand("simulate", "Monte Carlo run of the measurement protocol");
    simulate_cmd->add_option("state", o.state, state_help)->required();
    simulate_cmd->add_option("--config", o.config, "JSON with alice_bases, bob_bases, groups, seed");
    simulate_cmd->add_option("--groups", o.groups, "Number of two-pair groups (overrides config)");
    simulate_cmd->add_option("--seed", o.seed, "RNG seed (overrides config; default 0)");
    simulate_cmd->add_option("--threads", o.threads, "Worker threads (default: DEMONWORK_THREADS or cores)");
    simulate_cmd->add_option("--estimator", o.estimator, "plug-in or miller-madow")
        ->check(CLI::IsMember({"plug-in", "miller-madow"}));

    auto *chained = app.add_subcommand("chained", "Chained inequality on x-z plane angles A1,B1,A2,...");
    chained->add_option("state", o.state, state_help)->required();
    chained->add_option("--angles", o.angles, "Comma-separated angles in radians (pi shorthand allowed)")
        ->required();

    auto *dump = app.add_subcommand("dump-state", "Print the normalized state file");
    dump->add_option("state", o.state, state_help)->required();
    dump->add_flag("--dense", o.dense, "Emit the density matrix instead of family parameters");

    app.add_option("--dump-state", dump_argument, "Shorthand for 'dump-state STATE'");
    app.add_flag("--dense", o.dense, "With --dump-state: emit the density matrix");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }
    if (app.get_subcommands().empty()) {
        if (dump_argument.empty()) {
            err << "A subcommand is required\nRun with --help for more information.\n";
            return kExitInputError;
        }
        o.state = dump_argument;
    }

    const std::size_t workers = o.threads && *o.threads > 0 ? *o.threads : default_worker_count();
    try {
        if (*witness) {
            return cmd_witness(o, out);
        }
        if (*figure3) {
            return cmd_figure3(o, out, workers);
        }
        if (*werner) {
            return cmd_werner_scan(o, out, workers);
        }
        if (*cycle) {
            return cmd_cycle(o, out);
        }
        if (*simulate_cmd) {
            return cmd_simulate(o, out, workers);
        }
        if (*chained) {
            return cmd_chained(o, out);
        }
        if (*dump || !dump_argument.empty()) {
            return cmd_dump_state(o, out);
        }
    } catch (const OutOfModelError &e) {
        err << "error: " << e.what() << "\n";
        return kExitOutOfModel;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace demonwork::cli
