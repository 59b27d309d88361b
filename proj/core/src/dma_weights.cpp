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

#include "dmabf/dma_weights.hpp"

#include <cmath>
#include <string>

#include "dmabf/errors.hpp"

namespace dmabf {

namespace {

double wrap_phase(double phi)
{
    constexpr double two_pi = 2.0 * kPi;
    double r = phi - two_pi * std::floor(phi / two_pi);
    if (r >= two_pi || r < 0.0)
        r = 0.0;
    return r;
}

} // namespace

cplx lorentzian_of_phase(double phi) { return 0.5 * (kJ + std::polar(1.0, phi)); }

cplx b_of_g(cplx g)
{
    const double off = std::abs(std::abs(g - 0.5 * kJ) - 0.5);
    if (!(off <= kManifoldTolerance))
        throw ConstraintViolation("b_of_g: weight is " + std::to_string(off) +
                                  " away from the Lorentzian circle");
    return 2.0 * g - kJ;
}

cplx g_of_b(cplx b)
{
    const double off = std::abs(std::abs(b) - 1.0);
    if (!(off <= kManifoldTolerance))
        throw ConstraintViolation("g_of_b: |b| differs from 1 by " + std::to_string(off));
    return 0.5 * (b + kJ);
}

DmaWeights::DmaWeights(std::size_t n_strips, std::size_t m_elements, std::vector<double> phases)
    : n_strips_(n_strips), m_elements_(m_elements), phases_(std::move(phases))
{
    if (phases_.size() != n_strips_ * m_elements_)
        throw DimensionError("DmaWeights: expected " + std::to_string(n_strips_ * m_elements_) +
                             " phases, got " + std::to_string(phases_.size()));
    g_.resize(phases_.size());
    b_.resize(phases_.size());
    for (std::size_t u = 0; u < phases_.size(); ++u)
    {
        phases_[u] = wrap_phase(phases_[u]);
        b_[u] = std::polar(1.0, phases_[u]);
        g_[u] = 0.5 * (kJ + b_[u]);
    }
}

DmaWeights DmaWeights::from_circle_vars(std::size_t n_strips, std::size_t m_elements,
                                        std::span<const cplx> b)
{
    if (b.size() != n_strips * m_elements)
        throw DimensionError("DmaWeights::from_circle_vars: expected " +
                             std::to_string(n_strips * m_elements) + " entries, got " +
                             std::to_string(b.size()));
    std::vector<double> phases(b.size());
    for (std::size_t u = 0; u < b.size(); ++u)
    {
        const double off = std::abs(std::abs(b[u]) - 1.0);
        if (!(off <= kManifoldTolerance))
            throw ConstraintViolation("DmaWeights::from_circle_vars: |b[" + std::to_string(u) +
                                      "]| differs from 1 by " + std::to_string(off));
        phases[u] = std::arg(b[u]);
    }
    return DmaWeights(n_strips, m_elements, std::move(phases));
}

DmaWeights random_weights(const SystemConfig &cfg, Rng &rng)
{
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * kPi);
    std::vector<double> phases(cfg.n_total());
    for (double &p : phases)
        p = uniform(rng);
    return DmaWeights(cfg.n_strips, cfg.m_elements, std::move(phases));
}

cplx effective_strip_channel(std::span<const cplx> h_n, std::span<const cplx> g_n)
{
    if (h_n.size() != g_n.size())
        throw DimensionError("effective_strip_channel: channel has " + std::to_string(h_n.size()) +
                             " entries, weights have " + std::to_string(g_n.size()));
    cplx c(0.0);
    for (std::size_t m = 0; m < h_n.size(); ++m)
        c += std::conj(h_n[m]) * g_n[m];
    return c;
}

} // namespace dmabf
