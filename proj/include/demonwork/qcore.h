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

#ifndef DEMONWORK_QCORE_H
#define DEMONWORK_QCORE_H

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <span>
#include <variant>
#include <vector>

#include "demonwork/errors.h"

namespace demonwork {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector3 = Eigen::Vector3d;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;
inline constexpr double kUnitNormTolerance = 1e-12;

/// Pauli matrices, index 0..2 = x, y, z.
const std::array<Matrix2, 3> &pauli_matrices();

/// Unit vector in R^3. Identifies the projector (I + n.sigma)/2 and its qubit state.
class BlochDirection {
   public:
    /// Throws PreconditionError unless |v| = 1 within 1e-12.
    explicit BlochDirection(const Vector3 &v);
    BlochDirection(double x, double y, double z) : BlochDirection(Vector3(x, y, z)) {
    }

    static BlochDirection normalized(const Vector3 &v);
    /// (sin(polar) cos(azimuth), sin(polar) sin(azimuth), cos(polar)).
    static BlochDirection from_angles(double polar, double azimuth);
    /// Direction at `angle` in the x-z plane, measured from +z towards +x.
    static BlochDirection in_xz_plane(double angle);

    static BlochDirection plus_x() {
        return BlochDirection(1, 0, 0);
    }
    static BlochDirection plus_y() {
        return BlochDirection(0, 1, 0);
    }
    static BlochDirection plus_z() {
        return BlochDirection(0, 0, 1);
    }

    const Vector3 &vector() const {
        return n_;
    }
    double x() const {
        return n_.x();
    }
    double y() const {
        return n_.y();
    }
    double z() const {
        return n_.z();
    }
    BlochDirection operator-() const;

   private:
    struct Unchecked {};
    BlochDirection(const Vector3 &v, Unchecked) : n_(v) {
    }
    Vector3 n_;
};

/// (I + n.sigma)/2. Hermitian, idempotent, unit trace.
Matrix2 projector(const BlochDirection &n);

/// Density matrix of a pair of qubits. Ordering |ab> -> index 2a + b, Alice first.
///
/// Construction always validates; every live instance is Hermitian within 1e-12,
/// has unit trace within 1e-12 and no eigenvalue below -1e-10.
class TwoQubitState {
   public:
    /// Throws InvalidStateError if any check fails.
    static TwoQubitState from_matrix(const Matrix4 &m);
    static TwoQubitState from_pure(const Eigen::Vector4cd &psi);
    /// |a><a| (x) |b><b| for pure qubit states with Bloch vectors a, b.
    static TwoQubitState product(const BlochDirection &a, const BlochDirection &b);

    const Matrix4 &matrix() const {
        return rho_;
    }

   private:
    explicit TwoQubitState(const Matrix4 &m) : rho_(m) {
    }
    Matrix4 rho_;
};

struct PureSchmidt {
    double alpha;  ///< amplitude of |00>; |11> gets sqrt(1 - alpha^2)
};
struct ClassicalMix {
    double c0;   ///< weight of |00><00|
    double phi;  ///< |phi> = cos(phi/2)|0> + sin(phi/2)|1>, radians
};
struct Werner {
    double p;  ///< singlet weight
};
struct Dense {
    Matrix4 matrix;
};
using StateSpec = std::variant<PureSchmidt, ClassicalMix, Werner, Dense>;

/// Throws PreconditionError for out-of-range parameters and InvalidStateError for a bad
/// dense matrix.
TwoQubitState build_state(const StateSpec &spec);

/// Common fixed states.
TwoQubitState phi_plus();
TwoQubitState singlet();
TwoQubitState maximally_mixed();
TwoQubitState zero_zero();

struct HermitianEigensystem {
    std::vector<double> values;  ///< descending
    Eigen::MatrixXcd vectors;    ///< column k belongs to values[k]
    int sweeps = 0;
};

/// Cyclic complex Jacobi. Sweeps until the off-diagonal Frobenius norm is <= 1e-13,
/// at most 100 sweeps. Accepts 2x2 and 4x4 Hermitian input only.
HermitianEigensystem hermitian_eigensystem(const Eigen::MatrixXcd &m);
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd &m);

/// Shannon entropy (bits) of a probability vector with 0 log 0 = 0.
double shannon_entropy(std::span<const double> probabilities);
/// h(q) = -q log2 q - (1 - q) log2(1 - q).
double binary_entropy(double q);

/// -Tr rho log2 rho, bits.
double von_neumann_entropy(const TwoQubitState &rho);

/// Transpose on Bob's factor. Pure index permutation, so applying it twice is exact.
Matrix4 partial_transpose(const TwoQubitState &rho);
Matrix4 partial_transpose(const Matrix4 &m);

Matrix4 kron(const Matrix2 &a, const Matrix2 &b);

/// Pauli-basis form of a two-qubit state:
///   rho = (I + a.sigma (x) I + I (x) b.sigma + sum_ij T_ij sigma_i (x) sigma_j) / 4
struct CorrelationForm {
    Vector3 alice;         ///< a_i = Tr[rho sigma_i (x) I]
    Vector3 bob;           ///< b_j = Tr[rho I (x) sigma_j]
    Eigen::Matrix3d corr;  ///< T_ij = Tr[rho sigma_i (x) sigma_j]
};
CorrelationForm correlation_form(const TwoQubitState &rho);

/// exp(-i angle axis.sigma / 2).
Matrix2 su2_rotation(const BlochDirection &axis, double angle);
/// R with U (n.sigma) U^dagger = (R n).sigma.
Eigen::Matrix3d bloch_rotation(const Matrix2 &unitary);
/// (U_A (x) U_B) rho (U_A (x) U_B)^dagger.
TwoQubitState apply_local_unitaries(const TwoQubitState &rho, const Matrix2 &ua, const Matrix2 &ub);

}  // namespace demonwork

#endif
