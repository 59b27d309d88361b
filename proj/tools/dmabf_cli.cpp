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

// dmabf: Monte Carlo sweeps of DMA microstrip selection and hybrid beamforming.
//
//   dmabf power-sweep [--config f] [--trials n] [--seed s] [--schemes a,b] [--values dBm,...] [--out csv]
//   dmabf rf-sweep    [--config f] [--trials n] [--seed s] [--schemes a,b] [--values 1,2,...] [--power-dbm p] [--out csv]
//   dmabf single      [--config f] [--seed s] [--schemes a,b] [--power-dbm p] [--out csv]

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dmabf/config.hpp"
#include "dmabf/errors.hpp"
#include "dmabf/sweep.hpp"

namespace {

struct Options
{
    std::string config;
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    std::string schemes;
    std::string values;
    std::string out;
    double power_dbm = 0.0;
    std::size_t threads = 0;
};

std::vector<std::string> split_list(const std::string &text)
{
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos)
            items.push_back(item.substr(b, e - b + 1));
    }
    return items;
}

std::vector<dmabf::SchemeId> parse_schemes(const std::string &text)
{
    std::vector<dmabf::SchemeId> out;
    if (text.empty())
        return {std::begin(dmabf::kAllSchemes), std::end(dmabf::kAllSchemes)};
    for (const std::string &name : split_list(text))
    {
        auto id = dmabf::parse_scheme(name);
        if (!id)
            throw dmabf::ConfigError("unknown scheme '" + name + "'");
        out.push_back(*id);
    }
    return out;
}

std::vector<double> parse_values(const std::string &text)
{
    std::vector<double> out;
    for (const std::string &item : split_list(text))
    {
        std::size_t used = 0;
        double v = 0.0;
        try
        {
            v = std::stod(item, &used);
        }
        catch (const std::exception &)
        {
            used = 0;
        }
        if (used != item.size() || item.empty())
            throw dmabf::ConfigError("bad value '" + item + "'");
        out.push_back(v);
    }
    return out;
}

void emit(const std::vector<dmabf::SweepResult> &rows, const std::string &out)
{
    if (out.empty())
        dmabf::write_csv(rows, std::cout);
    else
        dmabf::write_csv(rows, std::filesystem::path(out));
}

dmabf::SystemConfig base_config(const Options &o)
{
    return o.config.empty() ? dmabf::SystemConfig::defaults() : dmabf::load_config(o.config);
}

int run_power(const Options &o)
{
    dmabf::SystemConfig cfg = base_config(o);
    dmabf::SweepSpec spec;
    spec.kind = dmabf::SweepKind::Power;
    spec.values = o.values.empty() ? std::vector<double>{-10, -5, 0, 5, 10} : parse_values(o.values);
    spec.schemes = parse_schemes(o.schemes);
    spec.trials = o.trials;
    spec.master_seed = o.seed;
    spec.threads = o.threads;
    emit(dmabf::run_sweep(cfg, spec), o.out);
    return 0;
}

int run_rf(const Options &o)
{
    dmabf::SystemConfig cfg = base_config(o);
    cfg.tx_power = dmabf::dbm_to_watts(o.power_dbm);
    dmabf::SweepSpec spec;
    spec.kind = dmabf::SweepKind::Rf;
    if (o.values.empty())
        for (std::size_t k = 1; k <= cfg.n_strips; ++k)
            spec.values.push_back(double(k));
    else
        spec.values = parse_values(o.values);
    spec.schemes = parse_schemes(o.schemes);
    spec.trials = o.trials;
    spec.master_seed = o.seed;
    spec.threads = o.threads;
    emit(dmabf::run_sweep(cfg, spec), o.out);
    return 0;
}

int run_single(const Options &o)
{
    dmabf::SystemConfig cfg = base_config(o);
    dmabf::SweepSpec spec;
    spec.kind = dmabf::SweepKind::Power;
    spec.values = {o.power_dbm};
    spec.schemes = parse_schemes(o.schemes);
    spec.trials = 1;
    spec.master_seed = o.seed;
    spec.threads = 1;
    const auto rows = dmabf::run_sweep(cfg, spec);
    if (!o.out.empty())
        dmabf::write_csv(rows, std::filesystem::path(o.out));
    for (const auto &r : rows)
        std::printf("%-18s %10.4f bit/s/Hz\n", std::string(dmabf::scheme_name(r.scheme)).c_str(), r.mean_se);
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Microstrip selection and hybrid beamforming for dynamic metasurface antennas"};
    app.require_subcommand(1);

    Options o;
    auto common = [&](CLI::App *sub, bool sweep) {
        sub->add_option("--config", o.config, "key=value configuration file")->check(CLI::ExistingFile);
        sub->add_option("--seed", o.seed, "master seed");
        sub->add_option("--schemes", o.schemes, "comma separated scheme names (default: all)");
        sub->add_option("--out", o.out, "CSV output path (default: stdout)");
        if (sweep)
        {
            sub->add_option("--trials", o.trials, "Monte Carlo trials per value")->check(CLI::PositiveNumber);
            sub->add_option("--values", o.values, "comma separated swept values");
            sub->add_option("--threads", o.threads, "worker threads (0 = hardware concurrency)");
        }
    };

    auto *power = app.add_subcommand("power-sweep", "spectral efficiency versus transmit power (dBm)");
    common(power, true);
    auto *rf = app.add_subcommand("rf-sweep", "spectral efficiency versus number of RF chains");
    common(rf, true);
    rf->add_option("--power-dbm", o.power_dbm, "transmit power in dBm")->capture_default_str();
    auto *single = app.add_subcommand("single", "one channel realization, every requested scheme");
    common(single, false);
    single->add_option("--power-dbm", o.power_dbm, "transmit power in dBm")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*power)
            return run_power(o);
        if (*rf)
            return run_rf(o);
        return run_single(o);
    }
    catch (const std::exception &e)
    {
        std::cerr << "dmabf: " << e.what() << '\n';
        return 1;
    }
}
