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

#ifndef DEMONWORK_WORKEXT_H
#define DEMONWORK_WORKEXT_H

#include <array>

#include "demonwork/qcore.h"

namespace demonwork {

inline constexpr double kProbabilityFloor = -1e-12;
inline constexpr double kDistributionSumTolerance = 1e-10;

/// Outcome table p(a, b) for one Alice and one Bob projective measurement.
/// Outcome 0 is the projector along the measurement direction, 1 its complement.
class JointDistribution {
   public:
    /// Entries in [-1e-12, 0) are clamped to zero. Anything more negative, or a sum away
    /// from 1 by more than 1e-10, throws PreconditionError.
    explicit JointDistribution(const std::array<double, 4> &table);
    JointDistribution(double p00, double p01, double p10, double p11)
        : JointDistribution(std::array<double, 4>{p00, p01, p10, p11}) {
    }

    double operator()(int a, int b) const {
        return p_[2 * a + b];
    }
    const std::array<double, 4> &table() const {
        return p_;
    }
    std::array<double, 2> alice_marginal() const {
        return {p_[0] + p_[1], p_[2] + p_[3]};
    }
    std::array<double, 2> bob_marginal() const {
        return {p_[0] + p_[2], p_[1] + p_[3]};
    }

   private:
    std::array<double, 4> p_;
};

struct EntropyBundle {
    double h_joint;
    double h_a;
    double h_b;
    double h_a_given_b;
    double h_b_given_a;
};

/// p(a, b) = Tr[(A^a (x) B^b) rho], evaluated as a full 4x4 trace.
JointDistribution joint_distribution(const TwoQubitState &rho, const BlochDirection &n_a,
                                     const BlochDirection &n_b);

/// Same table from the Pauli-basis form; a handful of flops per call.
JointDistribution joint_distribution(const CorrelationForm &form, const Vector3 &n_a, const Vector3 &n_b);

EntropyBundle entropy_bundle(const JointDistribution &d);

/// Work extractable from two copies, 2 - H(A|B) - H(B|A), in bits.
double xi(const TwoQubitState &rho, const BlochDirection &n_a, const BlochDirection &n_b);
double xi(const CorrelationForm &form, const Vector3 &n_a, const Vector3 &n_b);
double xi(const JointDistribution &d);

/// The joint-entropy form 2 - 2H(A,B) + H(A) + H(B). Algebraically identical to xi().
double xi_joint_form(const JointDistribution &d);

}  // namespace demonwork

#endif
