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

#include "demonwork/criteria.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "demonwork/quadrature.h"

namespace demonwork {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

Vector3 normal_from_angles(double polar, double azimuth) {
    return Vector3(std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar));
}

CorrelationForm product_form(const BlochDirection &a, const BlochDirection &b) {
    CorrelationForm f;
    f.alice = a.vector();
    f.bob = b.vector();
    f.corr = a.vector() * b.vector().transpose();
    return f;
}

void check_circle_nodes(std::size_t nodes) {
    if (nodes < kMinCircleNodes) {
        std::ostringstream msg;
        msg << "great-circle quadrature needs at least " << kMinCircleNodes << " nodes, got " << nodes;
        throw ConfigError(msg.str());
    }
}

}  // namespace

GreatCircleFrame::GreatCircleFrame(const BlochDirection &u, const BlochDirection &v) : u_(u), v_(v) {
    if (std::abs(u.vector().dot(v.vector())) > kUnitNormTolerance) {
        throw PreconditionError("great-circle frame vectors must be orthogonal");
    }
}

GreatCircleFrame GreatCircleFrame::from_normal(const Vector3 &normal) {
    Vector3 m = BlochDirection::normalized(normal).vector();
    Vector3 helper = std::abs(m.z()) < 0.9 ? Vector3(0, 0, 1) : Vector3(1, 0, 0);
    auto u = BlochDirection::normalized(helper - helper.dot(m) * m);
    auto v = BlochDirection::normalized(m.cross(u.vector()));
    return GreatCircleFrame(u, v);
}

GreatCircleFrame GreatCircleFrame::xz_plane() {
    return GreatCircleFrame(BlochDirection::plus_z(), BlochDirection::plus_x());
}

double xi_circle_average(const CorrelationForm &form, const GreatCircleFrame &frame_a,
                         const GreatCircleFrame &frame_b, std::size_t nodes) {
    check_circle_nodes(nodes);
    CompensatedSum sum;
    for (std::size_t k = 0; k < nodes; ++k) {
        double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(nodes);
        sum.add(xi(form, frame_a.direction(theta), frame_b.direction(theta)));
    }
    return std::clamp(sum.value() / static_cast<double>(nodes), 0.0, 2.0);
}

double xi_circle_average(const TwoQubitState &rho, const GreatCircleFrame &frame_a,
                         const GreatCircleFrame &frame_b, std::size_t nodes) {
    return xi_circle_average(correlation_form(rho), frame_a, frame_b, nodes);
}

CircleMaximum maximize_great_circle(const TwoQubitState &rho, const CircleSearchOptions &options) {
    check_circle_nodes(options.nodes);
    if (options.grid_polar < 2 || options.grid_azimuth < 1) {
        throw ConfigError("circle search grid must have at least 2 polar and 1 azimuthal points");
    }
    const CorrelationForm form = correlation_form(rho);
    int evaluations = 0;
    auto shared_average = [&](double polar, double azimuth) {
        ++evaluations;
        auto frame = GreatCircleFrame::from_normal(normal_from_angles(polar, azimuth));
        return xi_circle_average(form, frame, frame, options.nodes);
    };

    // The x-z circle has normal +y.
    double best_polar = std::numbers::pi / 2;
    double best_azimuth = std::numbers::pi / 2;
    ++evaluations;
    double best = xi_circle_average(form, GreatCircleFrame::xz_plane(), GreatCircleFrame::xz_plane(), options.nodes);
    GreatCircleFrame best_a = GreatCircleFrame::xz_plane();
    GreatCircleFrame best_b = best_a;

    for (int i = 0; i < options.grid_polar; ++i) {
        double polar = (std::numbers::pi / 2) * i / (options.grid_polar - 1);
        int azimuth_points = i == 0 ? 1 : options.grid_azimuth;
        for (int j = 0; j < azimuth_points; ++j) {
            double azimuth = kTwoPi * j / options.grid_azimuth;
            double value = shared_average(polar, azimuth);
            if (value > best) {
                best = value;
                best_polar = polar;
                best_azimuth = azimuth;
                best_a = GreatCircleFrame::from_normal(normal_from_angles(polar, azimuth));
                best_b = best_a;
            }
        }
    }

    NelderMeadResult refined;
    if (!options.independent_frames) {
        refined = nelder_mead_minimize(
            [&](const std::vector<double> &x) { return -shared_average(x[0], x[1]); }, {best_polar, best_azimuth},
            options.refine);
        if (-refined.value > best) {
            best = -refined.value;
            best_a = GreatCircleFrame::from_normal(normal_from_angles(refined.x[0], refined.x[1]));
            best_b = best_a;
        }
    } else {
        refined = nelder_mead_minimize(
            [&](const std::vector<double> &x) {
                ++evaluations;
                auto fa = GreatCircleFrame::from_normal(normal_from_angles(x[0], x[1]));
                auto fb = GreatCircleFrame::from_normal(normal_from_angles(x[2], x[3]));
                return -xi_circle_average(form, fa, fb, options.nodes);
            },
            {best_polar, best_azimuth, best_polar, best_azimuth}, options.refine);
        if (-refined.value > best) {
            best = -refined.value;
            best_a = GreatCircleFrame::from_normal(normal_from_angles(refined.x[0], refined.x[1]));
            best_b = GreatCircleFrame::from_normal(normal_from_angles(refined.x[2], refined.x[3]));
        }
    }
    return CircleMaximum{best, best_a, best_b, refined.converged, evaluations};
}

double xi_bloch_sphere(const CorrelationForm &form, std::size_t polar_nodes, std::size_t azimuthal_nodes) {
    if (polar_nodes < kMinPolarNodes || azimuthal_nodes < kMinAzimuthalNodes) {
        std::ostringstream msg;
        msg << "sphere quadrature needs >= " << kMinPolarNodes << " polar and >= " << kMinAzimuthalNodes
            << " azimuthal nodes, got " << polar_nodes << " x " << azimuthal_nodes;
        throw ConfigError(msg.str());
    }
    const GaussLegendreRule &rule = gauss_legendre(polar_nodes);
    std::vector<double> cos_az(azimuthal_nodes);
    std::vector<double> sin_az(azimuthal_nodes);
    for (std::size_t j = 0; j < azimuthal_nodes; ++j) {
        double phi = kTwoPi * static_cast<double>(j) / static_cast<double>(azimuthal_nodes);
        cos_az[j] = std::cos(phi);
        sin_az[j] = std::sin(phi);
    }
    CompensatedSum sum;
    for (std::size_t i = 0; i < polar_nodes; ++i) {
        const double z = rule.nodes[i];
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        CompensatedSum ring;
        for (std::size_t j = 0; j < azimuthal_nodes; ++j) {
            Vector3 n(s * cos_az[j], s * sin_az[j], z);
            ring.add(xi(form, n, n));
        }
        sum.add(rule.weights[i] * ring.value());
    }
    // dOmega / 4pi = d(cos polar) d(azimuth) / 4pi; the GL weights integrate to 2.
    return std::clamp(sum.value() / (2.0 * static_cast<double>(azimuthal_nodes)), 0.0, 2.0);
}

double xi_bloch_sphere(const TwoQubitState &rho, std::size_t polar_nodes, std::size_t azimuthal_nodes) {
    return xi_bloch_sphere(correlation_form(rho), polar_nodes, azimuthal_nodes);
}

double werner_xi_closed_form(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw PreconditionError("Werner weight must lie in [0, 1]");
    }
    auto xlog2x = [](double x) { return x > 0 ? x * std::log2(x) : 0.0; };
    return xlog2x(1 - p) + xlog2x(1 + p);
}

double great_circle_threshold(std::size_t nodes) {
    auto frame = GreatCircleFrame::xz_plane();
    return xi_circle_average(zero_zero(), frame, frame, nodes);
}

double bloch_sphere_threshold(std::size_t polar_nodes, std::size_t azimuthal_nodes) {
    return xi_bloch_sphere(zero_zero(), polar_nodes, azimuthal_nodes);
}

namespace {

WitnessVerdict make_verdict(double value, double threshold) {
    double margin = value - threshold;
    return WitnessVerdict{value, threshold, margin, margin > kDecisionTolerance};
}

}  // namespace

WitnessVerdict witness_great_circle(const TwoQubitState &rho, const CircleSearchOptions &options) {
    return make_verdict(maximize_great_circle(rho, options).value, great_circle_threshold(options.nodes));
}

WitnessVerdict witness_bloch_sphere(const TwoQubitState &rho, std::size_t polar_nodes, std::size_t azimuthal_nodes) {
    return make_verdict(xi_bloch_sphere(rho, polar_nodes, azimuthal_nodes),
                        bloch_sphere_threshold(polar_nodes, azimuthal_nodes));
}

SeparableDecomposition::SeparableDecomposition(std::vector<ProductComponent> components)
    : components_(std::move(components)) {
    if (components_.empty()) {
        throw PreconditionError("separable decomposition needs at least one component");
    }
    double total = 0;
    for (const auto &c : components_) {
        if (!(c.weight >= 0)) {
            throw PreconditionError("separable decomposition weights must be nonnegative");
        }
        total += c.weight;
    }
    if (std::abs(total - 1.0) > kDistributionSumTolerance) {
        throw PreconditionError("separable decomposition weights must sum to 1");
    }
}

TwoQubitState SeparableDecomposition::assemble() const {
    Matrix4 rho = Matrix4::Zero();
    for (const auto &c : components_) {
        rho += c.weight * kron(projector(c.alice), projector(c.bob));
    }
    Matrix4 sym = (rho + rho.adjoint()) * 0.5;
    return TwoQubitState::from_matrix(sym / sym.trace().real());
}

double pcs_bound(const SeparableDecomposition &d, const GreatCircleFrame &frame, std::size_t nodes) {
    CompensatedSum sum;
    for (const auto &c : d.components()) {
        sum.add(c.weight * xi_circle_average(product_form(c.alice, c.bob), frame, frame, nodes));
    }
    return sum.value();
}

double pcs_bound_optimized(const SeparableDecomposition &d, const CircleSearchOptions &options) {
    CompensatedSum sum;
    for (const auto &c : d.components()) {
        sum.add(c.weight * maximize_great_circle(TwoQubitState::product(c.alice, c.bob), options).value);
    }
    return sum.value();
}

ChainReport chained_inequality(const TwoQubitState &rho, std::span<const BlochDirection> alice_dirs,
                               std::span<const BlochDirection> bob_dirs) {
    const std::size_t n = alice_dirs.size();
    if (n == 0 || !(bob_dirs.size() == n || bob_dirs.size() + 1 == n)) {
        throw PreconditionError(
            "chain needs a nonempty Alice list and a Bob list of equal length or one shorter");
    }
    const std::size_t m = n + bob_dirs.size();
    if (m < 2) {
        throw PreconditionError("chain needs at least two directions");
    }
    const CorrelationForm form = correlation_form(rho);
    auto link = [&](std::size_t k) {
        // Position k: even -> Alice's A_{k/2}, odd -> Bob's B_{k/2}.
        std::size_t lo = k / 2;
        if (k % 2 == 0) {
            return xi(form, alice_dirs[lo].vector(), bob_dirs[lo].vector());
        }
        return xi(form, alice_dirs[lo + 1].vector(), bob_dirs[lo].vector());
    };
    CompensatedSum lhs;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        lhs.add(link(k));
    }
    const BlochDirection &last = (m % 2 == 0) ? bob_dirs[bob_dirs.size() - 1] : alice_dirs[n - 1];
    double closing = xi(form, alice_dirs[0].vector(), last.vector());
    double rhs = 2.0 * static_cast<double>(m - 2) + closing;
    double total = lhs.value();
    return ChainReport{n, total, rhs, total > rhs + kChainTolerance};
}

double chsh_horodecki(const TwoQubitState &rho) {
    const Eigen::Matrix3d t = correlation_form(rho).corr;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(t.transpose() * t, Eigen::EigenvaluesOnly);
    const auto &e = solver.eigenvalues();
    return e(1) + e(2);
}

bool chsh_violated(const TwoQubitState &rho) {
    return chsh_horodecki(rho) > 1.0 + kChshTolerance;
}

double partial_transpose_min_eigenvalue(const TwoQubitState &rho) {
    return hermitian_eigenvalues(partial_transpose(rho)).back();
}

bool ppt_separable(const TwoQubitState &rho) {
    return partial_transpose_min_eigenvalue(rho) >= -kPptTolerance;
}

BlochDirection random_direction(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        Vector3 v(gauss(rng), gauss(rng), gauss(rng));
        if (v.norm() > 1e-12) {
            return BlochDirection::normalized(v);
        }
    }
}

SeparableDecomposition random_separable_decomposition(std::mt19937_64 &rng, std::size_t components) {
    if (components == 0) {
        throw PreconditionError("need at least one component");
    }
    std::exponential_distribution<double> exponential(1.0);
    std::vector<double> weights(components);
    double total = 0;
    for (double &w : weights) {
        w = exponential(rng);
        total += w;
    }
    std::vector<ProductComponent> out;
    out.reserve(components);
    for (double w : weights) {
        auto a = random_direction(rng);
        auto b = random_direction(rng);
        out.push_back(ProductComponent{w / total, a, b});
    }
    return SeparableDecomposition(std::move(out));
}

}  // namespace demonwork
