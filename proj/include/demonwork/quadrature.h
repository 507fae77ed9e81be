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

#ifndef DEMONWORK_QUADRATURE_H
#define DEMONWORK_QUADRATURE_H

#include <cstddef>
#include <vector>

namespace demonwork {

/// Neumaier-compensated running sum. Adding terms in a fixed order gives a fixed result.
class CompensatedSum {
   public:
    void add(double x);
    double value() const {
        return sum_ + correction_;
    }

   private:
    double sum_ = 0;
    double correction_ = 0;
};

struct GaussLegendreRule {
    std::vector<double> nodes;  ///< ascending in [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], Newton iteration on the Legendre recurrence.
/// Cached per n; the returned reference stays valid for the life of the program.
const GaussLegendreRule &gauss_legendre(std::size_t n);

}  // namespace demonwork

#endif
