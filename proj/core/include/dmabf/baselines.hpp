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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmabf/array_channel.hpp"
#include "dmabf/config.hpp"

namespace dmabf {

enum class SchemeId
{
    Proposed,
    FullyDigital,
    DmaFullRf,
    DmaIncompact,
    RandomSelection,
    PsHybridPartial,
};

inline constexpr SchemeId kAllSchemes[] = {
    SchemeId::Proposed,     SchemeId::FullyDigital,    SchemeId::DmaFullRf,
    SchemeId::DmaIncompact, SchemeId::RandomSelection, SchemeId::PsHybridPartial,
};

// proposed, fully_digital, dma_full_rf, dma_incompact, random_selection, ps_hybrid_partial
std::string_view scheme_name(SchemeId id);
std::optional<SchemeId> parse_scheme(std::string_view name);

// MRT on a fully digital array: log2(1 + P ||h||^2 / sigma^2).
double fully_digital(std::span<const cplx> h, double tx_power, double noise_var);

// Proposed algorithm with every microstrip connected (n_rf = N).
double dma_full_rf(const ChannelRealization &h, const SystemConfig &cfg, Rng &rng);

// Proposed algorithm on a lambda/2 DMA. h and cfg must describe that geometry.
double dma_incompact(const ChannelRealization &h, const SystemConfig &cfg, Rng &rng);

// Uniform random n_rf-subset of microstrips.
std::vector<std::size_t> random_subset(std::size_t n_strips, std::size_t n_rf, Rng &rng);

// Random microstrip subset, then the alternating loop with that selection frozen.
double random_selection(const ChannelRealization &h, const SystemConfig &cfg, Rng &rng);

// Contiguous near-equal partition of u = 0..U-1 into n_rf subarrays; the first U % n_rf get one
// extra antenna. Returns [begin, end) pairs.
std::vector<std::pair<std::size_t, std::size_t>> contiguous_partition(std::size_t n_antennas,
                                                                      std::size_t n_rf);

// sum_{u in subarray} |h_u|: what one subarray collects under phase-conjugate analog weights.
double subarray_coherent_gain(std::span<const cplx> h, std::size_t begin, std::size_t end);

// Partially connected phase-shifter hybrid. Each RF chain drives one contiguous subarray through
// constant-modulus phase-conjugate weights exp(j arg h_u) / sqrt(|S_k|); MRT across subarrays.
// Throws DomainError if n_rf == 0 or n_rf > U.
double ps_hybrid_partial(std::span<const cplx> h, const SystemConfig &cfg, std::size_t n_rf);

} // namespace dmabf
