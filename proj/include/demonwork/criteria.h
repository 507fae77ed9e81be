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

#ifndef DEMONWORK_CRITERIA_H
#define DEMONWORK_CRITERIA_H

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "demonwork/nelder_mead.h"
#include "demonwork/qcore.h"
#include "demonwork/workext.h"

namespace demonwork {

inline constexpr std::size_t kDefaultCircleNodes = 1024;
inline constexpr std::size_t kMinCircleNodes = 16;
inline constexpr std::size_t kDefaultPolarNodes = 128;
inline constexpr std::size_t kDefaultAzimuthalNodes = 256;
inline constexpr std::size_t kMinPolarNodes = 16;
inline constexpr std::size_t kMinAzimuthalNodes = 32;

/// margin must exceed this before a witness reports entanglement.
inline constexpr double kDecisionTolerance = 1e-6;
inline constexpr double kChainTolerance = 1e-9;
inline constexpr double kChshTolerance = 1e-9;
inline constexpr double kPptTolerance = 1e-10;

/// Orthonormal pair spanning a great circle; n(theta) = u cos(theta) + v sin(theta).
class GreatCircleFrame {
   public:
    /// Throws PreconditionError unless u . v = 0 within 1e-12.
    GreatCircleFrame(const BlochDirection &u, const BlochDirection &v);

    /// Canonical frame for the circle with the given normal.
    static GreatCircleFrame from_normal(const Vector3 &normal);
    /// u = +z, v = +x, so |0> sits at theta = 0.
    static GreatCircleFrame xz_plane();

    const BlochDirection &u() const {
        return u_;
    }
    const BlochDirection &v() const {
        return v_;
    }
    Vector3 normal() const {
        return u_.vector().cross(v_.vector());
    }
    Vector3 direction(double theta) const {
        return u_.vector() * std::cos(theta) + v_.vector() * std::sin(theta);
    }

   private:
    BlochDirection u_;
    BlochDirection v_;
};

/// Periodic-trapezoid average of xi over the circle, both parties at the same theta.
/// Throws ConfigError for fewer than 16 nodes.
double xi_circle_average(const TwoQubitState &rho, const GreatCircleFrame &frame_a,
                         const GreatCircleFrame &frame_b, std::size_t nodes = kDefaultCircleNodes);
double xi_circle_average(const CorrelationForm &form, const GreatCircleFrame &frame_a,
                         const GreatCircleFrame &frame_b, std::size_t nodes = kDefaultCircleNodes);

struct CircleSearchOptions {
    std::size_t nodes = kDefaultCircleNodes;
    /// Search Alice's and Bob's circles separately (4 parameters). The default shares
    /// one circle between both parties.
    bool independent_frames = false;
    int grid_polar = 12;
    int grid_azimuth = 24;
    NelderMeadOptions refine{0.1, 1e-7, 500};
};

struct CircleMaximum {
    double value;
    GreatCircleFrame frame_a;
    GreatCircleFrame frame_b;  ///< equals frame_a unless independent_frames was set
    bool converged;
    int evaluations;
};

/// Coarse scan over circle normals, then Nelder-Mead refinement from the best grid point.
/// The x-z circle is always among the candidates, so the result never falls below it.
CircleMaximum maximize_great_circle(const TwoQubitState &rho, const CircleSearchOptions &options = {});

/// Gauss-Legendre in cos(polar) times periodic trapezoid in azimuth; both parties
/// measure along the same direction.
double xi_bloch_sphere(const TwoQubitState &rho, std::size_t polar_nodes = kDefaultPolarNodes,
                       std::size_t azimuthal_nodes = kDefaultAzimuthalNodes);
double xi_bloch_sphere(const CorrelationForm &form, std::size_t polar_nodes = kDefaultPolarNodes,
                       std::size_t azimuthal_nodes = kDefaultAzimuthalNodes);

/// (1 - p) log2(1 - p) + (1 + p) log2(1 + p), the sphere average for Werner states.
double werner_xi_closed_form(double p);

struct WitnessVerdict {
    double value;
    double threshold;
    double margin;
    bool entangled;
};

/// Threshold values: the same quadrature applied to |00><00|.
double great_circle_threshold(std::size_t nodes = kDefaultCircleNodes);
double bloch_sphere_threshold(std::size_t polar_nodes = kDefaultPolarNodes,
                              std::size_t azimuthal_nodes = kDefaultAzimuthalNodes);

WitnessVerdict witness_great_circle(const TwoQubitState &rho, const CircleSearchOptions &options = {});
WitnessVerdict witness_bloch_sphere(const TwoQubitState &rho, std::size_t polar_nodes = kDefaultPolarNodes,
                                    std::size_t azimuthal_nodes = kDefaultAzimuthalNodes);

struct ProductComponent {
    double weight;
    BlochDirection alice;
    BlochDirection bob;
};

/// sum_i p_i |a_i><a_i| (x) |b_i><b_i| with pure product components.
class SeparableDecomposition {
   public:
    /// Throws PreconditionError on negative weights, a weight sum off 1 by > 1e-10, or
    /// an empty list.
    explicit SeparableDecomposition(std::vector<ProductComponent> components);

    const std::vector<ProductComponent> &components() const {
        return components_;
    }
    TwoQubitState assemble() const;

   private:
    std::vector<ProductComponent> components_;
};

/// sum_i p_i (circle average of the i-th product component) on a fixed frame.
double pcs_bound(const SeparableDecomposition &d, const GreatCircleFrame &frame,
                 std::size_t nodes = kDefaultCircleNodes);
/// Same, each component on its own maximizing circle.
double pcs_bound_optimized(const SeparableDecomposition &d, const CircleSearchOptions &options = {});

struct ChainReport {
    std::size_t n;
    double lhs;
    double rhs;
    bool violated;
};

/// Chain A_1, B_1, A_2, B_2, ... of alternating Alice/Bob directions. lhs sums xi over
/// consecutive links; rhs = 2 (m - 2) + xi(first, last) for m directions. bob_dirs may have
/// one fewer element than alice_dirs, which closes the chain on an Alice direction
/// (m = 3 gives the three-observable form). In every term Alice measures the Alice-list
/// entry; the closing term puts the last direction on Bob's side.
ChainReport chained_inequality(const TwoQubitState &rho, std::span<const BlochDirection> alice_dirs,
                               std::span<const BlochDirection> bob_dirs);

/// Sum of the two largest eigenvalues of T^T T. CHSH is violable iff this exceeds 1.
double chsh_horodecki(const TwoQubitState &rho);
bool chsh_violated(const TwoQubitState &rho);

double partial_transpose_min_eigenvalue(const TwoQubitState &rho);
bool ppt_separable(const TwoQubitState &rho);

/// Uniform direction on the sphere (normalized 3D Gaussian).
BlochDirection random_direction(std::mt19937_64 &rng);
/// `components` pure product terms, symmetric Dirichlet(1) weights.
SeparableDecomposition random_separable_decomposition(std::mt19937_64 &rng, std::size_t components);

}  // namespace demonwork

#endif
