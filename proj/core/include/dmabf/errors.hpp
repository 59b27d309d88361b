// SPDX-License-Identifier: Apache-2.0
//
// dmabf: microstrip selection and hybrid beamforming for dynamic metasurface antennas
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace dmabf {

// Argument outside the mathematical domain of an operation (angle range, n_rf > N, negative SNR...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Vector / matrix lengths that do not agree.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A value that should lie on the Lorentzian circle (or the unit circle) does not.
class ConstraintViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The effective channel over the active microstrips is identically zero, so MRT is undefined.
class DegenerateChannel : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed configuration file or configuration that breaks a SystemConfig invariant.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A scheme failed inside a Monte Carlo sweep; the message names the scheme, swept value and trial.
class SweepError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dmabf
