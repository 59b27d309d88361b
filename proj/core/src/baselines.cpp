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

#include "dmabf/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dmabf/errors.hpp"
#include "dmabf/optimizer.hpp"

namespace dmabf {

std::string_view scheme_name(SchemeId id)
{
    switch (id)
    {
    case SchemeId::Proposed: return "proposed";
    case SchemeId::FullyDigital: return "fully_digital";
    case SchemeId::DmaFullRf: return "dma_full_rf";
    case SchemeId::DmaIncompact: return "dma_incompact";
    case SchemeId::RandomSelection: return "random_selection";
    case SchemeId::PsHybridPartial: return "ps_hybrid_partial";
    }
    return "unknown";
}

std::optional<SchemeId> parse_scheme(std::string_view name)
{
    for (SchemeId id : kAllSchemes)
        if (scheme_name(id) == name)
            return id;
    return std::nullopt;
}

double fully_digital(std::span<const cplx> h, double tx_power, double noise_var)
{
    double energy = 0.0;
    for (const cplx &x : h)
        energy += std::norm(x);
    return spectral_efficiency(tx_power * energy / noise_var);
}

double dma_full_rf(const ChannelRealization &h, const SystemConfig &cfg, Rng &rng)
{
    SystemConfig full = cfg;
    full.n_rf = h.n_strips;
    return optimize(h, full, rng).solution.spectral_efficiency;
}

double dma_incompact(const ChannelRealization &h, const SystemConfig &cfg, Rng &rng)
{
    return optimize(h, cfg, rng).solution.spectral_efficiency;
}

std::vector<std::size_t> random_subset(std::size_t n_strips, std::size_t n_rf, Rng &rng)
{
    if (n_rf > n_strips)
        throw DomainError("random_subset: n_rf exceeds the number of microstrips");
    // Partial Fisher-Yates with explicit index draws.
    std::vector<std::size_t> pool(n_strips);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < n_rf; ++i)
    {
        std::uniform_int_distribution<std::size_t> pick(i, n_strips - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    pool.resize(n_rf);
    std::sort(pool.begin(), pool.end());
    return pool;
}

double random_selection(const ChannelRealization &h, const SystemConfig &cfg, Rng &rng)
{
    OptimizeOptions opts;
    opts.frozen_selection = random_subset(h.n_strips, cfg.n_rf, rng);
    return optimize(h, cfg, rng, opts).solution.spectral_efficiency;
}

std::vector<std::pair<std::size_t, std::size_t>> contiguous_partition(std::size_t n_antennas,
                                                                      std::size_t n_rf)
{
    if (n_rf == 0 || n_rf > n_antennas)
        throw DomainError("contiguous_partition: need 1 <= n_rf <= " + std::to_string(n_antennas));
    const std::size_t base = n_antennas / n_rf, extra = n_antennas % n_rf;
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    parts.reserve(n_rf);
    std::size_t begin = 0;
    for (std::size_t k = 0; k < n_rf; ++k)
    {
        const std::size_t size = base + (k < extra ? 1 : 0);
        parts.emplace_back(begin, begin + size);
        begin += size;
    }
    return parts;
}

double subarray_coherent_gain(std::span<const cplx> h, std::size_t begin, std::size_t end)
{
    double sum = 0.0;
    for (std::size_t u = begin; u < end; ++u)
        sum += std::abs(h[u]);
    return sum;
}

double ps_hybrid_partial(std::span<const cplx> h, const SystemConfig &cfg, std::size_t n_rf)
{
    // Subarray k sees conj(h_u) exp(j arg h_u) / sqrt(|S_k|) = |h_u| / sqrt(|S_k|) per antenna,
    // and MRT over the n_rf resulting scalars gives SNR = P sum_k a_k^2 / sigma^2.
    double energy = 0.0;
    for (const auto &[begin, end] : contiguous_partition(h.size(), n_rf))
    {
        const double a = subarray_coherent_gain(h, begin, end) / std::sqrt(double(end - begin));
        energy += a * a;
    }
    return spectral_efficiency(cfg.tx_power * energy / cfg.noise_var);
}

} // namespace dmabf
