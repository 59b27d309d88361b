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

#include "dmabf/config.hpp"

#include <cmath>
#include <string>

#include "dmabf/errors.hpp"

namespace dmabf {

void SystemConfig::validate() const
{
    auto require = [](bool ok, const char *what) {
        if (!ok)
            throw ConfigError(std::string("invalid configuration: ") + what);
    };
    require(std::isfinite(carrier_frequency) && carrier_frequency > 0.0, "carrier frequency must be positive");
    require(n_strips > 0, "n_strips must be positive");
    require(m_elements > 0, "m_elements must be positive");
    require(std::isfinite(d_e) && d_e > 0.0, "element spacing must be positive");
    require(std::isfinite(d_s) && d_s > 0.0, "strip spacing must be positive");
    require(n_paths > 0, "n_paths must be positive");
    require(n_rf > 0, "n_rf must be positive");
    require(n_rf <= n_strips, "n_rf must not exceed n_strips");
    require(std::isfinite(tx_power) && tx_power > 0.0, "transmit power must be positive");
    require(std::isfinite(noise_var) && noise_var > 0.0, "noise variance must be positive");
    require(std::isfinite(wg_attenuation) && wg_attenuation >= 0.0, "waveguide attenuation must be non-negative");
    require(std::isfinite(wg_wavenumber), "waveguide wavenumber must be finite");
    require(std::isfinite(convergence_eps) && convergence_eps > 0.0, "eps must be positive");
    require(max_outer_iters > 0, "max_outer_iters must be positive");
}

SystemConfig SystemConfig::defaults()
{
    SystemConfig cfg;
    const double lambda = cfg.wavelength();
    cfg.d_e = lambda / 5.0;
    cfg.d_s = lambda / 2.0;
    return cfg;
}

SystemConfig half_wavelength_geometry(const SystemConfig &cfg)
{
    SystemConfig out = cfg;
    const double lambda = cfg.wavelength();
    out.m_elements = kHalfWaveElements;
    out.d_e = lambda / 2.0;
    out.d_s = lambda / 2.0;
    return out;
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

} // namespace dmabf
