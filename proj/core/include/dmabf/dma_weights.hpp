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

#include <span>
#include <vector>

#include "dmabf/array_channel.hpp"
#include "dmabf/config.hpp"

namespace dmabf {

// Distance from the Lorentzian circle (or the unit circle) beyond which inputs are rejected.
inline constexpr double kManifoldTolerance = 1e-9;

// (j + exp(j phi)) / 2, a point on the circle of radius 1/2 centred at j/2.
cplx lorentzian_of_phase(double phi);

// b = 2g - j maps the Lorentzian circle onto the unit circle. Both throw ConstraintViolation off-manifold.
cplx b_of_g(cplx g);
cplx g_of_b(cplx b);

// Lorentzian weights of an N x M metasurface.
//
// The phase is the only free parameter; the weights g and the unit-circle variables b are
// derived from it at construction and cannot be modified independently.
class DmaWeights
{
public:
    DmaWeights() = default;

    // Phases are wrapped into [0, 2 pi). Throws DimensionError if phases.size() != n*m.
    DmaWeights(std::size_t n_strips, std::size_t m_elements, std::vector<double> phases);

    // Unit-circle variables, strip-major. Throws ConstraintViolation if any |b| != 1.
    static DmaWeights from_circle_vars(std::size_t n_strips, std::size_t m_elements,
                                       std::span<const cplx> b);

    std::size_t n_strips() const { return n_strips_; }
    std::size_t m_elements() const { return m_elements_; }

    double phase(std::size_t n, std::size_t m) const { return phases_[n * m_elements_ + m]; }
    cplx weight(std::size_t n, std::size_t m) const { return g_[n * m_elements_ + m]; }
    cplx circle_var(std::size_t n, std::size_t m) const { return b_[n * m_elements_ + m]; }

    const std::vector<double> &phases() const { return phases_; }
    const CVec &weights() const { return g_; }
    const CVec &circle_vars() const { return b_; }

    std::span<const cplx> strip_weights(std::size_t n) const
    {
        return std::span<const cplx>(g_).subspan(n * m_elements_, m_elements_);
    }
    std::span<const cplx> strip_circle_vars(std::size_t n) const
    {
        return std::span<const cplx>(b_).subspan(n * m_elements_, m_elements_);
    }

    bool operator==(const DmaWeights &) const = default;

private:
    std::size_t n_strips_ = 0;
    std::size_t m_elements_ = 0;
    std::vector<double> phases_;
    CVec g_;
    CVec b_;
};

// i.i.d. U[0, 2 pi) phases.
DmaWeights random_weights(const SystemConfig &cfg, Rng &rng);

// c_n = sum_m conj(h_n[m]) g_n[m]. Throws DimensionError on length mismatch.
cplx effective_strip_channel(std::span<const cplx> h_n, std::span<const cplx> g_n);

} // namespace dmabf
