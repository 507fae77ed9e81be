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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace demonwork {

namespace {

constexpr double kJacobiOffNorm = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

double max_hermitian_defect(const Eigen::MatrixXcd &m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double off_diagonal_norm(const Eigen::MatrixXcd &a) {
    double sum = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

}  // namespace

const std::array<Matrix2, 3> &pauli_matrices() {
    static const std::array<Matrix2, 3> paulis = [] {
        const Complex i(0, 1);
        std::array<Matrix2, 3> s;
        s[0] << 0, 1, 1, 0;
        s[1] << 0, -i, i, 0;
        s[2] << 1, 0, 0, -1;
        return s;
    }();
    return paulis;
}

BlochDirection::BlochDirection(const Vector3 &v) : n_(v) {
    if (!v.allFinite() || std::abs(v.norm() - 1.0) > kUnitNormTolerance) {
        std::ostringstream msg;
        msg << "Bloch direction must be a unit vector, got (" << v.x() << ", " << v.y() << ", " << v.z()
            << ")";
        throw PreconditionError(msg.str());
    }
}

BlochDirection BlochDirection::normalized(const Vector3 &v) {
    double norm = v.norm();
    if (!std::isfinite(norm) || norm == 0) {
        throw PreconditionError("cannot normalize a zero or non-finite vector");
    }
    return BlochDirection(v / norm, Unchecked{});
}

BlochDirection BlochDirection::from_angles(double polar, double azimuth) {
    return normalized(Vector3(std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
                              std::cos(polar)));
}

BlochDirection BlochDirection::in_xz_plane(double angle) {
    return normalized(Vector3(std::sin(angle), 0, std::cos(angle)));
}

BlochDirection BlochDirection::operator-() const {
    return BlochDirection(-n_, Unchecked{});
}

Matrix2 projector(const BlochDirection &n) {
    const auto &s = pauli_matrices();
    Matrix2 p = Matrix2::Identity();
    p += n.x() * s[0] + n.y() * s[1] + n.z() * s[2];
    return p * 0.5;
}

Matrix4 kron(const Matrix2 &a, const Matrix2 &b) {
    Matrix4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

TwoQubitState TwoQubitState::from_matrix(const Matrix4 &m) {
    if (!m.allFinite()) {
        throw InvalidStateError("density matrix has non-finite entries");
    }
    double defect = max_hermitian_defect(m);
    if (defect > kHermitianTolerance) {
        std::ostringstream msg;
        msg << "density matrix is not Hermitian (max |rho - rho^dagger| = " << defect << ")";
        throw InvalidStateError(msg.str());
    }
    Complex tr = m.trace();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
        std::ostringstream msg;
        msg << "density matrix trace is " << tr.real() << " (expected 1)";
        throw InvalidStateError(msg.str());
    }
    Matrix4 sym = (m + m.adjoint()) * 0.5;
    auto eig = hermitian_eigenvalues(sym);
    if (eig.back() < kEigenvalueFloor) {
        std::ostringstream msg;
        msg << "density matrix is not positive semidefinite (min eigenvalue " << eig.back() << ")";
        throw InvalidStateError(msg.str());
    }
    return TwoQubitState(m);
}

TwoQubitState TwoQubitState::from_pure(const Eigen::Vector4cd &psi) {
    double norm = psi.norm();
    if (!std::isfinite(norm) || norm == 0) {
        throw InvalidStateError("state vector has zero or non-finite norm");
    }
    Eigen::Vector4cd unit = psi / norm;
    return from_matrix(unit * unit.adjoint());
}

TwoQubitState TwoQubitState::product(const BlochDirection &a, const BlochDirection &b) {
    return from_matrix(kron(projector(a), projector(b)));
}

namespace {

struct StateBuilder {
    TwoQubitState operator()(const PureSchmidt &s) const {
        if (!(s.alpha >= 0 && s.alpha <= 1)) {
            throw PreconditionError("pure_schmidt alpha must lie in [0, 1]");
        }
        double beta = std::sqrt(std::max(0.0, 1.0 - s.alpha * s.alpha));
        Eigen::Vector4cd psi(s.alpha, 0, 0, beta);
        Matrix4 rho = psi * psi.adjoint();
        return TwoQubitState::from_matrix(rho);
    }
    TwoQubitState operator()(const ClassicalMix &s) const {
        if (!(s.c0 >= 0 && s.c0 <= 1)) {
            throw PreconditionError("classical_mix c0 must lie in [0, 1]");
        }
        if (!std::isfinite(s.phi)) {
            throw PreconditionError("classical_mix phi must be finite");
        }
        Eigen::Vector2cd phi(std::cos(s.phi / 2), std::sin(s.phi / 2));
        Eigen::Vector4cd phiphi;
        phiphi << phi(0) * phi(0), phi(0) * phi(1), phi(1) * phi(0), phi(1) * phi(1);
        Matrix4 rho = Matrix4::Zero();
        rho(0, 0) = s.c0;
        rho += (1.0 - s.c0) * (phiphi * phiphi.adjoint());
        return TwoQubitState::from_matrix(rho);
    }
    TwoQubitState operator()(const Werner &s) const {
        if (!(s.p >= 0 && s.p <= 1)) {
            throw PreconditionError("werner p must lie in [0, 1]");
        }
        // p |Psi-><Psi-| + (1 - p) I/4 written out entry by entry.
        Matrix4 rho = Matrix4::Identity() * ((1.0 - s.p) / 4.0);
        rho(1, 1) += s.p / 2;
        rho(2, 2) += s.p / 2;
        rho(1, 2) -= s.p / 2;
        rho(2, 1) -= s.p / 2;
        return TwoQubitState::from_matrix(rho);
    }
    TwoQubitState operator()(const Dense &s) const {
        return TwoQubitState::from_matrix(s.matrix);
    }
};

}  // namespace

TwoQubitState build_state(const StateSpec &spec) {
    return std::visit(StateBuilder{}, spec);
}

TwoQubitState phi_plus() {
    return build_state(PureSchmidt{std::sqrt(0.5)});
}

TwoQubitState singlet() {
    return build_state(Werner{1.0});
}

TwoQubitState maximally_mixed() {
    return build_state(Werner{0.0});
}

TwoQubitState zero_zero() {
    return build_state(PureSchmidt{1.0});
}

HermitianEigensystem hermitian_eigensystem(const Eigen::MatrixXcd &m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n || (n != 2 && n != 4)) {
        throw PreconditionError("eigensolver accepts 2x2 or 4x4 matrices only");
    }
    if (!m.allFinite() || max_hermitian_defect(m) > kHermitianTolerance) {
        throw PreconditionError("eigensolver input is not Hermitian");
    }

    Eigen::MatrixXcd a = (m + m.adjoint()) * 0.5;
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
    int sweeps = 0;
    while (sweeps < kJacobiMaxSweeps && off_diagonal_norm(a) > kJacobiOffNorm) {
        ++sweeps;
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                double b = std::abs(a(p, q));
                if (b < 1e-300) {
                    continue;
                }
                // Phase-adjusted real Jacobi rotation J = [[c, s e], [-s conj(e), c]].
                Complex e = a(p, q) / b;
                double tau = (a(q, q).real() - a(p, p).real()) / (2 * b);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                double c = 1 / std::sqrt(1 + t * t);
                double s = t * c;
                Complex se = s * e;
                Complex sec = s * std::conj(e);
                for (Eigen::Index k = 0; k < n; ++k) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = c * akp - sec * akq;
                    a(k, q) = se * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = c * apk - se * aqk;
                    a(q, k) = sec * apk + c * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (Eigen::Index k = 0; k < n; ++k) {
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = c * vkp - sec * vkq;
                    v(k, q) = se * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() > a(j, j).real(); });

    HermitianEigensystem out;
    out.sweeps = sweeps;
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values.push_back(a(order[k], order[k]).real());
        out.vectors.col(k) = v.col(order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd &m) {
    return hermitian_eigensystem(m).values;
}

double shannon_entropy(std::span<const double> probabilities) {
    double h = 0;
    for (double q : probabilities) {
        if (q > 0) {
            h -= q * std::log2(q);
        }
    }
    return h;
}

double binary_entropy(double q) {
    const double pair[2] = {q, 1.0 - q};
    return shannon_entropy(pair);
}

double von_neumann_entropy(const TwoQubitState &rho) {
    auto eig = hermitian_eigenvalues(rho.matrix());
    for (double &lambda : eig) {
        if (lambda < kEigenvalueFloor) {
            throw InvalidStateError("negative eigenvalue in von Neumann entropy");
        }
        lambda = std::max(lambda, 0.0);
    }
    return std::clamp(shannon_entropy(eig), 0.0, 2.0);
}

Matrix4 partial_transpose(const Matrix4 &m) {
    Matrix4 out;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int a2 = 0; a2 < 2; ++a2) {
                for (int b2 = 0; b2 < 2; ++b2) {
                    out(2 * a + b, 2 * a2 + b2) = m(2 * a + b2, 2 * a2 + b);
                }
            }
        }
    }
    return out;
}

Matrix4 partial_transpose(const TwoQubitState &rho) {
    return partial_transpose(rho.matrix());
}

CorrelationForm correlation_form(const TwoQubitState &rho) {
    const auto &s = pauli_matrices();
    const Matrix2 id = Matrix2::Identity();
    const Matrix4 &m = rho.matrix();
    CorrelationForm f;
    for (int i = 0; i < 3; ++i) {
        f.alice(i) = (m * kron(s[i], id)).trace().real();
        f.bob(i) = (m * kron(id, s[i])).trace().real();
        for (int j = 0; j < 3; ++j) {
            f.corr(i, j) = (m * kron(s[i], s[j])).trace().real();
        }
    }
    return f;
}

Matrix2 su2_rotation(const BlochDirection &axis, double angle) {
    const auto &s = pauli_matrices();
    const Complex i(0, 1);
    Matrix2 generator = axis.x() * s[0] + axis.y() * s[1] + axis.z() * s[2];
    return std::cos(angle / 2) * Matrix2::Identity() - i * std::sin(angle / 2) * generator;
}

Eigen::Matrix3d bloch_rotation(const Matrix2 &unitary) {
    const auto &s = pauli_matrices();
    Eigen::Matrix3d r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r(i, j) = 0.5 * (s[i] * unitary * s[j] * unitary.adjoint()).trace().real();
        }
    }
    return r;
}

TwoQubitState apply_local_unitaries(const TwoQubitState &rho, const Matrix2 &ua, const Matrix2 &ub) {
    Matrix4 u = kron(ua, ub);
    Matrix4 out = u * rho.matrix() * u.adjoint();
    // Roundoff can leave ~1e-17 anti-Hermitian residue; restore exact symmetry.
    return TwoQubitState::from_matrix((out + out.adjoint()) * 0.5);
}

}  // namespace demonwork
