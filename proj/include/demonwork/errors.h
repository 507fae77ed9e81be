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

#ifndef DEMONWORK_ERRORS_H
#define DEMONWORK_ERRORS_H

#include <stdexcept>
#include <string>

namespace demonwork {

/// A caller broke a documented precondition (non-unit vector, non-Hermitian input, ...).
class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A density matrix failed the Hermitian / unit-trace / PSD checks.
class InvalidStateError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Bad numerical configuration, e.g. too few quadrature nodes.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The requested computation has no model for this state family.
class OutOfModelError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

}  // namespace demonwork

#endif
