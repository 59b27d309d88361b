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

#include <complex>
#include <cstddef>
#include <vector>

namespace dmabf {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kJ{0.0, 1.0};

// Element count along one row of the half-wavelength reference arrays (fully digital,
// phase-shifter hybrid, incompact DMA).
inline constexpr std::size_t kHalfWaveElements = 10;

// Physical and algorithmic parameters of one DMA link.
//
// Lengths are in metres, power in watts (linear), the waveguide constants in 1/m.
// Strip-major indexing is used throughout: element m of microstrip n lives at u = n*M + m.
struct SystemConfig
{
    double carrier_frequency = 28e9;
    std::size_t n_strips = 10;   // N
    std::size_t m_elements = 30; // M
    double d_e = 0.0;            // element spacing along a microstrip
    double d_s = 0.0;            // microstrip spacing
    std::size_t n_paths = 12;    // L
    std::size_t n_rf = 3;        // N_RF
    double tx_power = 1e-3;      // P
    double noise_var = 1e-3;     // sigma^2
    double wg_attenuation = 0.6; // beta
    double wg_wavenumber = 827.67; // alpha
    double convergence_eps = 1e-4;
    std::size_t max_outer_iters = 100;

    double wavelength() const { return kSpeedOfLight / carrier_frequency; }
    std::size_t n_total() const { return n_strips * m_elements; }

    // Throws ConfigError when an invariant is broken.
    void validate() const;

    // 28 GHz, N = 10, M = 30, d_e = lambda/5, d_s = lambda/2, L = 12, N_RF = 3,
    // beta = 0.6 1/m, alpha = 827.67 1/m, sigma^2 = P = 1 mW, eps = 1e-4.
    static SystemConfig defaults();
};

// Same carrier, paths and power, but a lambda/2 N x kHalfWaveElements layout.
// Used for the fully digital, phase-shifter and incompact DMA baselines.
SystemConfig half_wavelength_geometry(const SystemConfig &cfg);

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

} // namespace dmabf
