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

#include <random>
#include <span>
#include <vector>

#include "dmabf/config.hpp"

namespace dmabf {

using Rng = std::mt19937_64;

// Geometric multipath: one complex gain and one angle of departure per path.
struct PathSet
{
    CVec gains;                // eta_l
    std::vector<double> aods;  // theta_l in [0, pi)
};

struct SteeringVector
{
    double aod = 0.0;
    std::vector<double> spatial_freqs; // Omega_u in metres
    CVec entries;                      // exp(-j 2 pi Omega_u / lambda)
};

// One channel draw seen through a DMA (or a plain array when the waveguide response is all-ones).
struct ChannelRealization
{
    PathSet paths;
    CVec intrinsic; // free-space channel, strip-major
    CVec waveguide; // in-waveguide propagation response
    CVec effective; // intrinsic .* waveguide
    std::size_t n_strips = 0;
    std::size_t m_elements = 0;

    // Effective channel of microstrip n (M contiguous entries).
    std::span<const cplx> strip(std::size_t n) const
    {
        return std::span<const cplx>(effective).subspan(n * m_elements, m_elements);
    }
};

// Omega at u = n*M + m is m*d_e*sin(theta) + n*d_s*cos(theta). Throws DomainError unless theta in [0, pi).
SteeringVector steering_vector(double theta, const SystemConfig &cfg);

// L i.i.d. CN(0, 1/L) gains and L i.i.d. U[0, pi) angles.
PathSet sample_paths(const SystemConfig &cfg, Rng &rng);

CVec intrinsic_channel(const PathSet &paths, const SystemConfig &cfg);

// f[n*M + m] = exp(-(m+1) d_e (beta + j alpha)); identical on every strip.
CVec waveguide_response(const SystemConfig &cfg);

// Elementwise product. Throws DimensionError on length mismatch.
CVec effective_channel(std::span<const cplx> intrinsic, std::span<const cplx> waveguide);

// Builds intrinsic, waveguide and effective channels of `cfg` for the given paths.
ChannelRealization make_channel(const PathSet &paths, const SystemConfig &cfg);

// Plain array (no waveguide): the effective channel equals the intrinsic one.
ChannelRealization make_plain_channel(const PathSet &paths, const SystemConfig &cfg);

} // namespace dmabf
