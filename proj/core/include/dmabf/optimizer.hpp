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
#include <vector>

#include "dmabf/array_channel.hpp"
#include "dmabf/dma_weights.hpp"

namespace dmabf {

struct BeamformingSolution
{
    std::vector<std::size_t> active_set; // ascending strip indices
    CVec w;                              // length N, zero outside active_set
    DmaWeights weights;
    double snr = 0.0;
    double spectral_efficiency = 0.0; // bit/s/Hz
    std::size_t outer_iterations = 0;
};

// SNR after each outer iteration.
struct OptimizerTrace
{
    std::vector<double> snr_per_iteration;
};

struct CoordinateAscentOptions
{
    // Stop a strip once a full sweep raises its objective by less than this.
    double eps = 1e-6;
    // Also stop once the largest phase step in a sweep is below this (0 disables).
    double angle_tol = 0.0;
    std::size_t max_sweeps = 200;
};

struct OptimizeOptions
{
    CoordinateAscentOptions inner;
    // When set, microstrip selection is skipped and this set is used in every iteration.
    std::optional<std::vector<std::size_t>> frozen_selection;
};

struct OptimizeResult
{
    BeamformingSolution solution;
    OptimizerTrace trace;
};

// |c_n|^2 for every microstrip.
std::vector<double> strip_gains(const ChannelRealization &h, const DmaWeights &weights);

// The n_rf largest gains, ties to the lower index, returned ascending. Throws DomainError if n_rf > N.
std::vector<std::size_t> select_strips(std::span<const double> gains, std::size_t n_rf);

// Maximum ratio transmission over the active strips: sqrt(P) conj(c_I) / ||c_I||.
// Throws DegenerateChannel if c_I is identically zero.
CVec mrt_beamformer(const ChannelRealization &h, const DmaWeights &weights,
                    std::span<const std::size_t> active_set, double tx_power);

// Scatter the reduced beamformer into a length-N vector. Throws DimensionError / std::out_of_range.
CVec embed_w(std::span<const cplx> w_active, std::span<const std::size_t> active_set,
             std::size_t n_strips);

// |sum_n c_n w_n|^2 / sigma^2. Throws DomainError if noise_var <= 0.
double snr(const ChannelRealization &h, const DmaWeights &weights, std::span<const cplx> w,
           double noise_var);

// log2(1 + snr). Throws DomainError on negative input.
double spectral_efficiency(double snr);

// Per-coordinate quantities of the unit-circle problem on one microstrip. h_n is the strip's
// effective channel and b_n its unit-circle variables.
//
//   tilde_h(m) = sum_{m' != m} conj(h[m']) b[m'] + j sum_{m'} conj(h[m'])
cplx tilde_h(std::span<const cplx> h_n, std::span<const cplx> b_n, std::size_t m);

// Optimal unit-circle value for coordinate m with all others fixed:
// exp(-j arg(conj(h[m]) conj(tilde_h))). Returns b_n[m] unchanged when that product is zero.
cplx update_phase(std::span<const cplx> h_n, std::span<const cplx> b_n, std::size_t m);

// |sum_m conj(h[m]) (b[m] + j)|^2 = 4 |c_n|^2 for one strip.
double strip_circle_objective(std::span<const cplx> h_n, std::span<const cplx> b_n);

// Sum of strip_circle_objective over the active strips.
double circle_objective(const ChannelRealization &h, const DmaWeights &weights,
                        std::span<const std::size_t> active_set);

// Cyclic coordinate ascent on the active strips (m = 0..M-1 per sweep). Strips outside
// active_set keep their weights.
DmaWeights coordinate_ascent(const ChannelRealization &h, const DmaWeights &weights,
                             std::span<const std::size_t> active_set,
                             const CoordinateAscentOptions &opts = {});

// Alternating selection + MRT / coordinate ascent starting from `initial`.
OptimizeResult optimize_from(const ChannelRealization &h, const SystemConfig &cfg,
                             DmaWeights initial, const OptimizeOptions &opts = {});

// Same, starting from random_weights(cfg, rng).
OptimizeResult optimize(const ChannelRealization &h, const SystemConfig &cfg, Rng &rng,
                        const OptimizeOptions &opts = {});

} // namespace dmabf
