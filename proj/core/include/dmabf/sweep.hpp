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

#include <cstdint>
#include <filesystem>
#include <span>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmabf/baselines.hpp"
#include "dmabf/config.hpp"

namespace dmabf {

enum class SweepKind
{
    Power, // values are transmit powers in dBm
    Rf,    // values are RF chain counts
};

std::string_view sweep_kind_name(SweepKind kind);

struct SweepSpec
{
    SweepKind kind = SweepKind::Power;
    std::vector<double> values;
    std::vector<SchemeId> schemes;
    std::size_t trials = 200;
    std::uint64_t master_seed = 1;
    // 0 picks std::thread::hardware_concurrency(). Output does not depend on it.
    std::size_t threads = 0;

    // Throws ConfigError unless values are non-empty and sorted, trials >= 1, schemes non-empty
    // and (for Rf) every value is an integer in [1, N].
    void validate(const SystemConfig &cfg) const;
};

struct SweepResult
{
    SchemeId scheme = SchemeId::Proposed;
    SweepKind kind = SweepKind::Power;
    double swept_value = 0.0;
    double mean_se = 0.0;
    double std_se = 0.0; // sample standard deviation across trials
    std::size_t trials = 0;
    std::uint64_t master_seed = 0;

    bool operator==(const SweepResult &) const = default;
};

// Flat key=value parser. '#' starts a comment; blank lines are ignored. Recognised keys:
//   carrier_hz n_strips m_elements d_e_over_lambda d_s_over_lambda n_paths n_rf
//   noise_dbm wg_beta wg_alpha eps max_outer_iters
// Missing keys keep SystemConfig::defaults(). Throws ConfigError with a line number.
SystemConfig parse_config(std::istream &in);
SystemConfig load_config(const std::filesystem::path &path);

// Spectral efficiency of every scheme in `schemes` on trial `trial` of `master_seed`.
// cfg.tx_power and cfg.n_rf are taken as-is.
std::vector<double> run_trial(const SystemConfig &cfg, std::span<const SchemeId> schemes,
                              std::uint64_t master_seed, std::uint64_t trial);

// Rows ordered by swept value, then by the order of spec.schemes.
std::vector<SweepResult> run_sweep(const SystemConfig &cfg, const SweepSpec &spec);

// Per-trial spectral efficiencies, indexed [value][scheme][trial].
using TrialTable = std::vector<std::vector<std::vector<double>>>;
TrialTable run_sweep_trials(const SystemConfig &cfg, const SweepSpec &spec);

inline constexpr std::string_view kCsvHeader =
    "scheme,sweep_kind,swept_value,mean_se,std_se,trials,master_seed";

void write_csv(std::span<const SweepResult> rows, std::ostream &out);
void write_csv(std::span<const SweepResult> rows, const std::filesystem::path &path);

std::vector<SweepResult> read_csv(std::istream &in);
std::vector<SweepResult> read_csv(const std::filesystem::path &path);

} // namespace dmabf
