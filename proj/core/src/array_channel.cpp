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

#include "dmabf/array_channel.hpp"

#include <cmath>
#include <string>

#include "dmabf/errors.hpp"

namespace dmabf {

SteeringVector steering_vector(double theta, const SystemConfig &cfg)
{
    if (!(theta >= 0.0 && theta < kPi))
        throw DomainError("steering_vector: angle of departure " + std::to_string(theta) +
                          " outside [0, pi)");

    const std::size_t N = cfg.n_strips, M = cfg.m_elements;
    const double k = 2.0 * kPi / cfg.wavelength();
    const double along = cfg.d_e * std::sin(theta);
    const double across = cfg.d_s * std::cos(theta);

    SteeringVector sv;
    sv.aod = theta;
    sv.spatial_freqs.resize(N * M);
    sv.entries.resize(N * M);
    for (std::size_t n = 0; n < N; ++n)
        for (std::size_t m = 0; m < M; ++m)
        {
            const std::size_t u = n * M + m;
            const double omega = double(m) * along + double(n) * across;
            sv.spatial_freqs[u] = omega;
            sv.entries[u] = std::polar(1.0, -k * omega);
        }
    return sv;
}

PathSet sample_paths(const SystemConfig &cfg, Rng &rng)
{
    const std::size_t L = cfg.n_paths;
    // CN(0, 1/L): real and imaginary parts each have variance 1/(2L)
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5 / double(L)));
    std::uniform_real_distribution<double> angle(0.0, kPi);

    PathSet p;
    p.gains.reserve(L);
    p.aods.reserve(L);
    for (std::size_t l = 0; l < L; ++l)
    {
        const double re = normal(rng);
        const double im = normal(rng);
        p.gains.emplace_back(re, im);
        double theta = angle(rng);
        if (theta >= kPi) // uniform_real_distribution may round up to the bound
            theta = 0.0;
        p.aods.push_back(theta);
    }
    return p;
}

CVec intrinsic_channel(const PathSet &paths, const SystemConfig &cfg)
{
    if (paths.gains.size() != paths.aods.size())
        throw DimensionError("intrinsic_channel: gains and aods differ in length");

    CVec h(cfg.n_total(), cplx(0.0));
    for (std::size_t l = 0; l < paths.gains.size(); ++l)
    {
        const SteeringVector a = steering_vector(paths.aods[l], cfg);
        for (std::size_t u = 0; u < h.size(); ++u)
            h[u] += paths.gains[l] * a.entries[u];
    }
    return h;
}

CVec waveguide_response(const SystemConfig &cfg)
{
    const std::size_t N = cfg.n_strips, M = cfg.m_elements;
    const cplx decay(cfg.wg_attenuation, cfg.wg_wavenumber);

    CVec row(M);
    for (std::size_t m = 0; m < M; ++m)
    {
        const double rho = double(m + 1) * cfg.d_e;
        row[m] = std::exp(-rho * decay);
    }

    CVec f;
    f.reserve(N * M);
    for (std::size_t n = 0; n < N; ++n)
        f.insert(f.end(), row.begin(), row.end());
    return f;
}

CVec effective_channel(std::span<const cplx> intrinsic, std::span<const cplx> waveguide)
{
    if (intrinsic.size() != waveguide.size())
        throw DimensionError("effective_channel: intrinsic has " + std::to_string(intrinsic.size()) +
                             " entries, waveguide has " + std::to_string(waveguide.size()));
    CVec h(intrinsic.size());
    for (std::size_t u = 0; u < h.size(); ++u)
        h[u] = intrinsic[u] * waveguide[u];
    return h;
}

ChannelRealization make_channel(const PathSet &paths, const SystemConfig &cfg)
{
    ChannelRealization ch;
    ch.paths = paths;
    ch.n_strips = cfg.n_strips;
    ch.m_elements = cfg.m_elements;
    ch.intrinsic = intrinsic_channel(paths, cfg);
    ch.waveguide = waveguide_response(cfg);
    ch.effective = effective_channel(ch.intrinsic, ch.waveguide);
    return ch;
}

ChannelRealization make_plain_channel(const PathSet &paths, const SystemConfig &cfg)
{
    ChannelRealization ch;
    ch.paths = paths;
    ch.n_strips = cfg.n_strips;
    ch.m_elements = cfg.m_elements;
    ch.intrinsic = intrinsic_channel(paths, cfg);
    ch.waveguide.assign(ch.intrinsic.size(), cplx(1.0));
    ch.effective = ch.intrinsic;
    return ch;
}

} // namespace dmabf
