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

#include "dmabf/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dmabf/errors.hpp"

namespace dmabf {

namespace {

void check_dims(const ChannelRealization &h, const DmaWeights &weights, const char *who)
{
    if (h.n_strips != weights.n_strips() || h.m_elements != weights.m_elements() ||
        h.effective.size() != h.n_strips * h.m_elements)
        throw DimensionError(std::string(who) + ": channel is " + std::to_string(h.n_strips) + "x" +
                             std::to_string(h.m_elements) + ", weights are " +
                             std::to_string(weights.n_strips()) + "x" +
                             std::to_string(weights.m_elements()));
}

cplx strip_channel(const ChannelRealization &h, const DmaWeights &weights, std::size_t n)
{
    return effective_strip_channel(h.strip(n), weights.strip_weights(n));
}

// One strip of cyclic coordinate ascent. b_n is updated in place; a sweep that fails to raise the
// objective is rolled back so the strip objective is non-decreasing in floating point too.
void ascend_strip(std::span<const cplx> h_n, std::span<cplx> b_n, const CoordinateAscentOptions &opts)
{
    const std::size_t M = h_n.size();
    cplx offset(0.0);
    for (const cplx &x : h_n)
        offset += std::conj(x);
    offset *= kJ;

    CVec saved(b_n.begin(), b_n.end());
    double objective = strip_circle_objective(h_n, b_n);

    for (std::size_t sweep = 0; sweep < opts.max_sweeps; ++sweep)
    {
        std::copy(b_n.begin(), b_n.end(), saved.begin());

        cplx running(0.0); // sum_m conj(h[m]) b[m]
        for (std::size_t m = 0; m < M; ++m)
            running += std::conj(h_n[m]) * b_n[m];

        double max_step = 0.0;
        for (std::size_t m = 0; m < M; ++m)
        {
            const cplx x = std::conj(h_n[m]);
            const cplx rest = running - x * b_n[m] + offset;
            const cplx z = x * std::conj(rest);
            if (z == cplx(0.0))
                continue;
            const cplx next = std::polar(1.0, -std::arg(z));
            max_step = std::max(max_step, std::abs(std::arg(next * std::conj(b_n[m]))));
            running += x * (next - b_n[m]);
            b_n[m] = next;
        }

        const double updated = strip_circle_objective(h_n, b_n);
        if (updated < objective)
        {
            std::copy(saved.begin(), saved.end(), b_n.begin());
            break;
        }
        const double gain = updated - objective;
        objective = updated;
        if (gain < opts.eps || (opts.angle_tol > 0.0 && max_step < opts.angle_tol))
            break;
    }
}

} // namespace

std::vector<double> strip_gains(const ChannelRealization &h, const DmaWeights &weights)
{
    check_dims(h, weights, "strip_gains");
    std::vector<double> gains(h.n_strips);
    for (std::size_t n = 0; n < h.n_strips; ++n)
        gains[n] = std::norm(strip_channel(h, weights, n));
    return gains;
}

std::vector<std::size_t> select_strips(std::span<const double> gains, std::size_t n_rf)
{
    if (n_rf > gains.size())
        throw DomainError("select_strips: n_rf = " + std::to_string(n_rf) + " exceeds " +
                          std::to_string(gains.size()) + " microstrips");
    std::vector<std::size_t> order(gains.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return gains[a] > gains[b]; });
    order.resize(n_rf);
    std::sort(order.begin(), order.end());
    return order;
}

CVec mrt_beamformer(const ChannelRealization &h, const DmaWeights &weights,
                    std::span<const std::size_t> active_set, double tx_power)
{
    check_dims(h, weights, "mrt_beamformer");
    CVec c(active_set.size());
    double energy = 0.0;
    for (std::size_t j = 0; j < active_set.size(); ++j)
    {
        if (active_set[j] >= h.n_strips)
            throw std::out_of_range("mrt_beamformer: strip index out of range");
        c[j] = strip_channel(h, weights, active_set[j]);
        energy += std::norm(c[j]);
    }
    if (!(energy > 0.0))
        throw DegenerateChannel("mrt_beamformer: effective channel is zero on every active microstrip");

    const double scale = std::sqrt(tx_power / energy);
    CVec w(c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        w[j] = scale * std::conj(c[j]);
    return w;
}

CVec embed_w(std::span<const cplx> w_active, std::span<const std::size_t> active_set,
             std::size_t n_strips)
{
    if (w_active.size() != active_set.size())
        throw DimensionError("embed_w: " + std::to_string(w_active.size()) + " coefficients for " +
                             std::to_string(active_set.size()) + " strips");
    CVec w(n_strips, cplx(0.0));
    for (std::size_t j = 0; j < active_set.size(); ++j)
    {
        if (active_set[j] >= n_strips)
            throw std::out_of_range("embed_w: strip index " + std::to_string(active_set[j]) +
                                    " out of range");
        w[active_set[j]] = w_active[j];
    }
    return w;
}

double snr(const ChannelRealization &h, const DmaWeights &weights, std::span<const cplx> w,
           double noise_var)
{
    if (!(noise_var > 0.0))
        throw DomainError("snr: noise variance must be positive");
    check_dims(h, weights, "snr");
    if (w.size() != h.n_strips)
        throw DimensionError("snr: beamformer length differs from the number of microstrips");
    cplx y(0.0);
    for (std::size_t n = 0; n < h.n_strips; ++n)
        if (w[n] != cplx(0.0))
            y += strip_channel(h, weights, n) * w[n];
    return std::norm(y) / noise_var;
}

double spectral_efficiency(double snr)
{
    if (!(snr >= 0.0))
        throw DomainError("spectral_efficiency: SNR must be non-negative");
    return std::log2(1.0 + snr);
}

cplx tilde_h(std::span<const cplx> h_n, std::span<const cplx> b_n, std::size_t m)
{
    if (h_n.size() != b_n.size())
        throw DimensionError("tilde_h: channel and circle variables differ in length");
    if (m >= h_n.size())
        throw std::out_of_range("tilde_h: element index out of range");
    cplx others(0.0), offset(0.0);
    for (std::size_t k = 0; k < h_n.size(); ++k)
    {
        if (k != m)
            others += std::conj(h_n[k]) * b_n[k];
        offset += std::conj(h_n[k]);
    }
    return others + kJ * offset;
}

cplx update_phase(std::span<const cplx> h_n, std::span<const cplx> b_n, std::size_t m)
{
    const cplx z = std::conj(h_n[m]) * std::conj(tilde_h(h_n, b_n, m));
    if (z == cplx(0.0))
        return b_n[m];
    return std::polar(1.0, -std::arg(z));
}

double strip_circle_objective(std::span<const cplx> h_n, std::span<const cplx> b_n)
{
    if (h_n.size() != b_n.size())
        throw DimensionError("strip_circle_objective: length mismatch");
    cplx s(0.0);
    for (std::size_t m = 0; m < h_n.size(); ++m)
        s += std::conj(h_n[m]) * (b_n[m] + kJ);
    return std::norm(s);
}

double circle_objective(const ChannelRealization &h, const DmaWeights &weights,
                        std::span<const std::size_t> active_set)
{
    check_dims(h, weights, "circle_objective");
    double total = 0.0;
    for (std::size_t n : active_set)
        total += strip_circle_objective(h.strip(n), weights.strip_circle_vars(n));
    return total;
}

DmaWeights coordinate_ascent(const ChannelRealization &h, const DmaWeights &weights,
                             std::span<const std::size_t> active_set,
                             const CoordinateAscentOptions &opts)
{
    check_dims(h, weights, "coordinate_ascent");
    std::vector<std::size_t> order(active_set.begin(), active_set.end());
    std::sort(order.begin(), order.end());

    const std::size_t M = h.m_elements;
    CVec b = weights.circle_vars();
    std::vector<double> phases = weights.phases();
    // The objective is a sum of per-strip terms with disjoint variables, so each strip is
    // iterated to its own convergence.
    for (std::size_t n : order)
    {
        if (n >= h.n_strips)
            throw std::out_of_range("coordinate_ascent: strip index out of range");
        ascend_strip(h.strip(n), std::span<cplx>(b).subspan(n * M, M), opts);
        for (std::size_t u = n * M; u < (n + 1) * M; ++u)
            phases[u] = std::arg(b[u]);
    }
    return DmaWeights(h.n_strips, M, std::move(phases));
}

OptimizeResult optimize_from(const ChannelRealization &h, const SystemConfig &cfg,
                             DmaWeights initial, const OptimizeOptions &opts)
{
    check_dims(h, initial, "optimize");
    if (cfg.n_rf > h.n_strips)
        throw DomainError("optimize: n_rf exceeds the number of microstrips");
    if (opts.frozen_selection)
        for (std::size_t n : *opts.frozen_selection)
            if (n >= h.n_strips)
                throw std::out_of_range("optimize: frozen selection index out of range");

    OptimizeResult result;
    DmaWeights current = std::move(initial);
    bool have_solution = false;

    for (std::size_t it = 0; it < cfg.max_outer_iters; ++it)
    {
        std::vector<std::size_t> active;
        if (opts.frozen_selection)
        {
            active = *opts.frozen_selection;
            std::sort(active.begin(), active.end());
        }
        else
        {
            active = select_strips(strip_gains(h, current), cfg.n_rf);
        }
        // Digital step on the current weights; throws when the channel is degenerate.
        (void)mrt_beamformer(h, current, active, cfg.tx_power);

        DmaWeights next = coordinate_ascent(h, current, active, opts.inner);
        const CVec w = embed_w(mrt_beamformer(h, next, active, cfg.tx_power), active, h.n_strips);
        const double value = snr(h, next, w, cfg.noise_var);
        result.trace.snr_per_iteration.push_back(value);

        const double previous = have_solution ? result.solution.snr : 0.0;
        const bool improved = !have_solution || value >= previous;
        if (improved)
        {
            BeamformingSolution &sol = result.solution;
            sol.active_set = active;
            sol.w = w;
            sol.weights = next;
            sol.snr = value;
            sol.spectral_efficiency = spectral_efficiency(value);
        }
        result.solution.outer_iterations = it + 1;
        current = std::move(next);

        if (have_solution && value - previous < cfg.convergence_eps)
            break;
        have_solution = true;
    }
    return result;
}

OptimizeResult optimize(const ChannelRealization &h, const SystemConfig &cfg, Rng &rng,
                        const OptimizeOptions &opts)
{
    SystemConfig geometry = cfg;
    geometry.n_strips = h.n_strips;
    geometry.m_elements = h.m_elements;
    return optimize_from(h, cfg, random_weights(geometry, rng), opts);
}

} // namespace dmabf
