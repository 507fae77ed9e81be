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

#include "demonwork/qcore.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.h"

using namespace demonwork;
using demonwork::testing::random_state;
using demonwork::testing::random_unit;
using demonwork::testing::random_unitary;

namespace {

void expect_matrix_near(const Eigen::MatrixXcd &actual, const Eigen::MatrixXcd &expected, double tol) {
    ASSERT_EQ(actual.rows(), expected.rows());
    EXPECT_LE((actual - expected).cwiseAbs().maxCoeff(), tol) << actual << "\nvs\n" << expected;
}

}  // namespace

TEST(Projector, coordinate_axes) {
    Matrix2 up;
    up << 1, 0, 0, 0;
    Matrix2 plus_x;
    plus_x << 0.5, 0.5, 0.5, 0.5;
    Matrix2 down;
    down << 0, 0, 0, 1;
    expect_matrix_near(projector(BlochDirection::plus_z()), up, 1e-15);
    expect_matrix_near(projector(BlochDirection::plus_x()), plus_x, 1e-15);
    expect_matrix_near(projector(BlochDirection(0, 0, -1)), down, 1e-15);
}

TEST(Projector, rejects_non_unit) {
    EXPECT_THROW(BlochDirection(1, 1, 0), PreconditionError);
    EXPECT_THROW(BlochDirection(0, 0, 0), PreconditionError);
    EXPECT_THROW(BlochDirection::normalized(Vector3::Zero()), PreconditionError);
}

TEST(Projector, idempotent_and_complementary) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto n = random_unit(rng);
        Matrix2 p = projector(n);
        expect_matrix_near(p * p, p, 1e-12);
        expect_matrix_near(p, p.adjoint(), 1e-15);
        EXPECT_NEAR(p.trace().real(), 1.0, 1e-15);
        expect_matrix_near(p + projector(-n), Matrix2::Identity(), 1e-12);
    }
}

TEST(BuildState, limits) {
    Matrix4 quarter = Matrix4::Identity() * 0.25;
    expect_matrix_near(build_state(Werner{0}).matrix(), quarter, 0);

    Matrix4 ket00 = Matrix4::Zero();
    ket00(0, 0) = 1;
    expect_matrix_near(build_state(PureSchmidt{1.0}).matrix(), ket00, 0);

    Matrix4 diag_mix = Matrix4::Zero();
    diag_mix(0, 0) = 0.5;
    diag_mix(3, 3) = 0.5;
    expect_matrix_near(build_state(ClassicalMix{0.5, std::numbers::pi}).matrix(), diag_mix, 1e-15);
}

TEST(BuildState, werner_one_is_singlet_projector) {
    Eigen::Vector4cd psi(0, std::sqrt(0.5), -std::sqrt(0.5), 0);
    expect_matrix_near(build_state(Werner{1}).matrix(), psi * psi.adjoint(), 1e-15);
}

TEST(BuildState, classical_mix_is_ppt) {
    for (double c0 : {0.0, 0.3, 0.7, 1.0}) {
        for (double phi : {0.2, 1.0, 2.5, std::numbers::pi}) {
            auto rho = build_state(ClassicalMix{c0, phi});
            EXPECT_GE(hermitian_eigenvalues(partial_transpose(rho)).back(), -1e-10);
        }
    }
}

TEST(BuildState, parameter_ranges) {
    EXPECT_THROW(build_state(Werner{1.5}), PreconditionError);
    EXPECT_THROW(build_state(Werner{-0.1}), PreconditionError);
    EXPECT_THROW(build_state(PureSchmidt{1.01}), PreconditionError);
    EXPECT_THROW(build_state(ClassicalMix{-0.2, 1.0}), PreconditionError);
    EXPECT_THROW(build_state(ClassicalMix{0.5, NAN}), PreconditionError);
}

TEST(BuildState, dense_validation) {
    Matrix4 not_psd = Matrix4::Zero();
    not_psd(0, 0) = 1.5;
    not_psd(1, 1) = -0.5;
    EXPECT_THROW(build_state(Dense{not_psd}), InvalidStateError);

    Matrix4 bad_trace = Matrix4::Identity() * 0.3;
    EXPECT_THROW(build_state(Dense{bad_trace}), InvalidStateError);

    Matrix4 non_hermitian = Matrix4::Identity() * 0.25;
    non_hermitian(0, 1) = Complex(0.1, 0);
    EXPECT_THROW(build_state(Dense{non_hermitian}), InvalidStateError);

    Matrix4 ok = Matrix4::Identity() * 0.25;
    ok(0, 3) = Complex(0, 0.1);
    ok(3, 0) = Complex(0, -0.1);
    EXPECT_NO_THROW(build_state(Dense{ok}));
}

TEST(Eigensolver, diagonal_and_identity) {
    Matrix4 d = Matrix4::Zero();
    d(0, 0) = 1;
    EXPECT_EQ(hermitian_eigenvalues(d), (std::vector<double>{1, 0, 0, 0}));
    auto quarter = hermitian_eigenvalues(Matrix4::Identity() * 0.25);
    for (double v : quarter) {
        EXPECT_EQ(v, 0.25);
    }
}

TEST(Eigensolver, werner_spectrum_matches_analytic_and_reference_solver) {
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        auto rho = build_state(Werner{p});
        auto eig = hermitian_eigenvalues(rho.matrix());
        std::vector<double> expected = {(1 + 3 * p) / 4, (1 - p) / 4, (1 - p) / 4, (1 - p) / 4};
        Eigen::SelfAdjointEigenSolver<Matrix4> reference(rho.matrix());
        for (int k = 0; k < 4; ++k) {
            EXPECT_NEAR(eig[k], expected[k], 1e-10) << "p=" << p;
            EXPECT_NEAR(eig[k], reference.eigenvalues()(3 - k), 1e-12) << "p=" << p;
        }
    }
}

TEST(Eigensolver, residuals_on_random_hermitian) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = trial % 2 == 0 ? 4 : 2;
        Eigen::MatrixXcd m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                m(i, j) = Complex(g(rng), g(rng));
            }
        }
        m = (m + m.adjoint()).eval() * 0.5;
        auto sys = hermitian_eigensystem(m);
        ASSERT_EQ(static_cast<int>(sys.values.size()), n);
        double trace = 0;
        for (int k = 0; k < n; ++k) {
            trace += sys.values[k];
            if (k > 0) {
                EXPECT_GE(sys.values[k - 1], sys.values[k]);
            }
            Eigen::VectorXcd v = sys.vectors.col(k);
            EXPECT_LE((m * v - sys.values[k] * v).norm(), 1e-9);
        }
        EXPECT_NEAR(trace, m.trace().real(), 1e-10);
        EXPECT_LE(sys.sweeps, 100);
    }
}

TEST(Eigensolver, rejects_bad_input) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
    EXPECT_THROW(hermitian_eigenvalues(m), PreconditionError);
    Matrix2 skew;
    skew << 0, 1, 0, 0;
    EXPECT_THROW(hermitian_eigenvalues(skew), PreconditionError);
}

TEST(VonNeumann, reference_values) {
    EXPECT_EQ(von_neumann_entropy(zero_zero()), 0.0);
    EXPECT_NEAR(von_neumann_entropy(maximally_mixed()), 2.0, 1e-14);
    // -sum lambda log2 lambda over {0.625, 0.125, 0.125, 0.125}.
    EXPECT_NEAR(von_neumann_entropy(build_state(Werner{0.5})), 1.5487949406953985, 1e-12);
}

TEST(VonNeumann, invariant_under_local_unitaries) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto rho = random_state(rng);
        auto rotated = apply_local_unitaries(rho, random_unitary(rng), random_unitary(rng));
        EXPECT_NEAR(von_neumann_entropy(rho), von_neumann_entropy(rotated), 1e-9);
    }
}

TEST(PartialTranspose, examples) {
    Matrix4 ket00 = zero_zero().matrix();
    EXPECT_EQ(partial_transpose(zero_zero()), ket00);
    EXPECT_EQ(partial_transpose(maximally_mixed()), maximally_mixed().matrix());
    auto pt = partial_transpose(phi_plus());
    Eigen::SelfAdjointEigenSolver<Matrix4> reference(pt);
    EXPECT_NEAR(reference.eigenvalues()(0), -0.5, 1e-12);
    EXPECT_NEAR(hermitian_eigenvalues(pt).back(), -0.5, 1e-12);
}

TEST(PartialTranspose, exact_involution) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto rho = random_state(rng);
        Matrix4 twice = partial_transpose(partial_transpose(rho));
        EXPECT_TRUE(twice == rho.matrix());
        Matrix4 once = partial_transpose(rho);
        EXPECT_LE((once - once.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
        EXPECT_NEAR(once.trace().real(), 1.0, 1e-12);
    }
}

TEST(CorrelationForm, reconstructs_state) {
    std::mt19937_64 rng(9);
    const auto &s = pauli_matrices();
    for (int trial = 0; trial < 20; ++trial) {
        auto rho = random_state(rng);
        auto f = correlation_form(rho);
        Matrix4 rebuilt = Matrix4::Identity();
        for (int i = 0; i < 3; ++i) {
            rebuilt += f.alice(i) * kron(s[i], Matrix2::Identity()) + f.bob(i) * kron(Matrix2::Identity(), s[i]);
            for (int j = 0; j < 3; ++j) {
                rebuilt += f.corr(i, j) * kron(s[i], s[j]);
            }
        }
        expect_matrix_near(rebuilt / 4.0, rho.matrix(), 1e-12);
    }
}

TEST(Rotations, bloch_rotation_matches_conjugation) {
    std::mt19937_64 rng(13);
    const auto &s = pauli_matrices();
    for (int trial = 0; trial < 50; ++trial) {
        Matrix2 u = random_unitary(rng);
        Eigen::Matrix3d r = bloch_rotation(u);
        EXPECT_LE((r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
        auto n = random_unit(rng);
        Matrix2 lhs = u * (n.x() * s[0] + n.y() * s[1] + n.z() * s[2]) * u.adjoint();
        Vector3 m = r * n.vector();
        Matrix2 rhs = m.x() * s[0] + m.y() * s[1] + m.z() * s[2];
        expect_matrix_near(lhs, rhs, 1e-12);
    }
    // Quarter turn about y carries +z to +x.
    Eigen::Matrix3d ry = bloch_rotation(su2_rotation(BlochDirection::plus_y(), std::numbers::pi / 2));
    EXPECT_LE((ry * Vector3(0, 0, 1) - Vector3(1, 0, 0)).norm(), 1e-12);
}
