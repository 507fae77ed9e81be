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

#include "demonwork/workext.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace demonwork {

JointDistribution::JointDistribution(const std::array<double, 4> &table) : p_(table) {
    double sum = 0;
    for (double &q : p_) {
        if (!std::isfinite(q) || q < kProbabilityFloor) {
            std::ostringstream msg;
            msg << "joint distribution entry " << q << " is not a probability";
            throw PreconditionError(msg.str());
        }
        q = std::max(q, 0.0);
        sum += q;
    }
    if (std::abs(sum - 1.0) > kDistributionSumTolerance) {
        std::ostringstream msg;
        msg << "joint distribution sums to " << sum;
        throw PreconditionError(msg.str());
    }
}

JointDistribution joint_distribution(const TwoQubitState &rho, const BlochDirection &n_a,
                                     const BlochDirection &n_b) {
    const Matrix2 pa[2] = {projector(n_a), projector(-n_a)};
    const Matrix2 pb[2] = {projector(n_b), projector(-n_b)};
    std::array<double, 4> table;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            table[2 * a + b] = (kron(pa[a], pb[b]) * rho.matrix()).trace().real();
        }
    }
    return JointDistribution(table);
}

JointDistribution joint_distribution(const CorrelationForm &form, const Vector3 &n_a, const Vector3 &n_b) {
    const double ea = form.alice.dot(n_a);
    const double eb = form.bob.dot(n_b);
    const double eab = n_a.dot(form.corr * n_b);
    return JointDistribution(0.25 * (1 + ea + eb + eab), 0.25 * (1 + ea - eb - eab),
                             0.25 * (1 - ea + eb - eab), 0.25 * (1 - ea - eb + eab));
}

EntropyBundle entropy_bundle(const JointDistribution &d) {
    EntropyBundle e;
    e.h_joint = shannon_entropy(d.table());
    e.h_a = shannon_entropy(d.alice_marginal());
    e.h_b = shannon_entropy(d.bob_marginal());
    e.h_a_given_b = std::max(0.0, e.h_joint - e.h_b);
    e.h_b_given_a = std::max(0.0, e.h_joint - e.h_a);
    return e;
}

double xi(const JointDistribution &d) {
    EntropyBundle e = entropy_bundle(d);
    return std::clamp(2.0 - e.h_a_given_b - e.h_b_given_a, 0.0, 2.0);
}

double xi_joint_form(const JointDistribution &d) {
    EntropyBundle e = entropy_bundle(d);
    return 2.0 - 2.0 * e.h_joint + e.h_a + e.h_b;
}

double xi(const TwoQubitState &rho, const BlochDirection &n_a, const BlochDirection &n_b) {
    return xi(joint_distribution(rho, n_a, n_b));
}

double xi(const CorrelationForm &form, const Vector3 &n_a, const Vector3 &n_b) {
    return xi(joint_distribution(form, n_a, n_b));
}

}  // namespace demonwork
