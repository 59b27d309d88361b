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

#include "dmabf/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "dmabf/array_channel.hpp"
#include "dmabf/errors.hpp"
#include "dmabf/optimizer.hpp"
#include "dmabf/seeding.hpp"

namespace dmabf {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
std::optional<T> parse_number(std::string_view text)
{
    T value{};
    const char *begin = text.data(), *end = text.data() + text.size();
    if (!text.empty() && text.front() == '+')
        ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end)
        return std::nullopt;
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true)
    {
        const auto pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

SystemConfig config_for_value(const SystemConfig &cfg, SweepKind kind, double value)
{
    SystemConfig out = cfg;
    if (kind == SweepKind::Power)
        out.tx_power = dbm_to_watts(value);
    else
        out.n_rf = static_cast<std::size_t>(value);
    return out;
}

} // namespace

std::string_view sweep_kind_name(SweepKind kind) { return kind == SweepKind::Power ? "power" : "rf"; }

void SweepSpec::validate(const SystemConfig &cfg) const
{
    if (values.empty())
        throw ConfigError("sweep: no values given");
    if (!std::is_sorted(values.begin(), values.end()))
        throw ConfigError("sweep: values must be sorted ascending");
    if (trials < 1)
        throw ConfigError("sweep: trials must be at least 1");
    if (schemes.empty())
        throw ConfigError("sweep: no schemes given");
    for (double v : values)
    {
        if (!std::isfinite(v))
            throw ConfigError("sweep: non-finite value");
        if (kind == SweepKind::Rf && (v < 1.0 || v != std::floor(v) || v > double(cfg.n_strips)))
            throw ConfigError("sweep: RF chain count " + format_double(v) +
                              " must be an integer in [1, " + std::to_string(cfg.n_strips) + "]");
    }
}

SystemConfig parse_config(std::istream &in)
{
    std::map<std::string, std::pair<std::string, std::size_t>> entries;
    static const char *const known[] = {"carrier_hz", "n_strips", "m_elements", "d_e_over_lambda",
                                        "d_s_over_lambda", "n_paths", "n_rf", "noise_dbm",
                                        "wg_beta", "wg_alpha", "eps", "max_outer_iters"};

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw))
    {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (std::find(std::begin(known), std::end(known), key) == std::end(known))
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        if (value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty value for '" + key + "'");
        if (!entries.emplace(key, std::make_pair(value, line_no)).second)
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }

    auto real = [&](const std::string &key) -> std::optional<double> {
        auto it = entries.find(key);
        if (it == entries.end())
            return std::nullopt;
        auto v = parse_number<double>(it->second.first);
        if (!v)
            throw ConfigError("line " + std::to_string(it->second.second) + ": '" + key +
                              "' is not a number");
        return v;
    };
    auto count = [&](const std::string &key) -> std::optional<std::size_t> {
        auto it = entries.find(key);
        if (it == entries.end())
            return std::nullopt;
        auto v = parse_number<std::size_t>(it->second.first);
        if (!v)
            throw ConfigError("line " + std::to_string(it->second.second) + ": '" + key +
                              "' is not a non-negative integer");
        return v;
    };

    SystemConfig cfg = SystemConfig::defaults();
    if (auto v = real("carrier_hz"))
        cfg.carrier_frequency = *v;
    if (auto v = count("n_strips"))
        cfg.n_strips = *v;
    if (auto v = count("m_elements"))
        cfg.m_elements = *v;
    if (auto v = count("n_paths"))
        cfg.n_paths = *v;
    if (auto v = count("n_rf"))
        cfg.n_rf = *v;
    if (auto v = count("max_outer_iters"))
        cfg.max_outer_iters = *v;
    if (auto v = real("noise_dbm"))
        cfg.noise_var = dbm_to_watts(*v);
    if (auto v = real("wg_beta"))
        cfg.wg_attenuation = *v;
    if (auto v = real("wg_alpha"))
        cfg.wg_wavenumber = *v;
    if (auto v = real("eps"))
        cfg.convergence_eps = *v;

    const double lambda = cfg.wavelength();
    cfg.d_e = real("d_e_over_lambda").value_or(0.2) * lambda;
    cfg.d_s = real("d_s_over_lambda").value_or(0.5) * lambda;

    cfg.validate();
    return cfg;
}

SystemConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path.string());
    return parse_config(in);
}

std::vector<double> run_trial(const SystemConfig &cfg, std::span<const SchemeId> schemes,
                              std::uint64_t master_seed, std::uint64_t trial)
{
    Rng path_rng(derive_seed(master_seed, trial, Stream::Paths));
    const PathSet paths = sample_paths(cfg, path_rng);

    const SystemConfig half_wave = half_wavelength_geometry(cfg);
    std::optional<ChannelRealization> dma, incompact, plain;
    auto dma_channel = [&]() -> const ChannelRealization & {
        if (!dma)
            dma = make_channel(paths, cfg);
        return *dma;
    };
    auto plain_channel = [&]() -> const ChannelRealization & {
        if (!plain)
            plain = make_plain_channel(paths, half_wave);
        return *plain;
    };

    std::vector<double> se;
    se.reserve(schemes.size());
    for (SchemeId id : schemes)
    {
        switch (id)
        {
        case SchemeId::Proposed: {
            Rng rng(derive_seed(master_seed, trial, Stream::DmaInit));
            se.push_back(optimize(dma_channel(), cfg, rng).solution.spectral_efficiency);
            break;
        }
        case SchemeId::DmaFullRf: {
            Rng rng(derive_seed(master_seed, trial, Stream::DmaInit));
            se.push_back(dma_full_rf(dma_channel(), cfg, rng));
            break;
        }
        case SchemeId::RandomSelection: {
            Rng rng(derive_seed(master_seed, trial, Stream::Subset));
            se.push_back(random_selection(dma_channel(), cfg, rng));
            break;
        }
        case SchemeId::DmaIncompact: {
            if (!incompact)
                incompact = make_channel(paths, half_wave);
            Rng rng(derive_seed(master_seed, trial, Stream::IncompactInit));
            se.push_back(dma_incompact(*incompact, half_wave, rng));
            break;
        }
        case SchemeId::FullyDigital:
            se.push_back(fully_digital(plain_channel().intrinsic, cfg.tx_power, cfg.noise_var));
            break;
        case SchemeId::PsHybridPartial:
            se.push_back(ps_hybrid_partial(plain_channel().intrinsic, cfg, cfg.n_rf));
            break;
        }
    }
    return se;
}

TrialTable run_sweep_trials(const SystemConfig &cfg, const SweepSpec &spec)
{
    cfg.validate();
    spec.validate(cfg);

    const std::size_t n_values = spec.values.size();
    const std::size_t n_schemes = spec.schemes.size();
    const std::size_t n_trials = spec.trials;

    std::vector<SystemConfig> configs;
    for (double v : spec.values)
    {
        configs.push_back(config_for_value(cfg, spec.kind, v));
        configs.back().validate();
    }

    TrialTable table(n_values, std::vector<std::vector<double>>(n_schemes, std::vector<double>(n_trials)));

    const std::size_t n_jobs = n_values * n_trials;
    std::size_t n_threads = spec.threads ? spec.threads : std::thread::hardware_concurrency();
    n_threads = std::clamp<std::size_t>(n_threads, 1, std::max<std::size_t>(n_jobs, 1));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::size_t error_job = n_jobs;
    std::exception_ptr error;

    auto worker = [&]() {
        for (std::size_t job = next++; job < n_jobs; job = next++)
        {
            const std::size_t v = job / n_trials, t = job % n_trials;
            try
            {
                const std::vector<double> se = run_trial(configs[v], spec.schemes, spec.master_seed, t);
                for (std::size_t s = 0; s < n_schemes; ++s)
                    table[v][s][t] = se[s];
            }
            catch (const std::exception &e)
            {
                // Re-run scheme by scheme to name the failing one.
                std::string scheme = "?";
                for (SchemeId id : spec.schemes)
                {
                    try
                    {
                        (void)run_trial(configs[v], std::span<const SchemeId>(&id, 1), spec.master_seed, t);
                    }
                    catch (...)
                    {
                        scheme = std::string(scheme_name(id));
                        break;
                    }
                }
                std::lock_guard lock(error_mutex);
                if (job < error_job)
                {
                    error_job = job;
                    error = std::make_exception_ptr(SweepError(
                        "scheme " + scheme + ", " + std::string(sweep_kind_name(spec.kind)) + " value " +
                        format_double(spec.values[v]) + ", trial " + std::to_string(t) + ": " + e.what()));
                }
            }
        }
    };

    if (n_threads == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < n_threads; ++i)
            pool.emplace_back(worker);
    }
    if (error)
        std::rethrow_exception(error);
    return table;
}

std::vector<SweepResult> run_sweep(const SystemConfig &cfg, const SweepSpec &spec)
{
    const TrialTable table = run_sweep_trials(cfg, spec);
    std::vector<SweepResult> rows;
    for (std::size_t v = 0; v < spec.values.size(); ++v)
        for (std::size_t s = 0; s < spec.schemes.size(); ++s)
        {
            const std::vector<double> &x = table[v][s];
            double sum = 0.0;
            for (double e : x)
                sum += e;
            const double mean = sum / double(x.size());
            double ss = 0.0;
            for (double e : x)
                ss += (e - mean) * (e - mean);
            const double sd = x.size() > 1 ? std::sqrt(ss / double(x.size() - 1)) : 0.0;
            rows.push_back({spec.schemes[s], spec.kind, spec.values[v], mean, sd, x.size(), spec.master_seed});
        }
    return rows;
}

void write_csv(std::span<const SweepResult> rows, std::ostream &out)
{
    out << kCsvHeader << '\n';
    for (const SweepResult &r : rows)
        out << scheme_name(r.scheme) << ',' << sweep_kind_name(r.kind) << ',' << format_double(r.swept_value)
            << ',' << format_double(r.mean_se) << ',' << format_double(r.std_se) << ',' << r.trials << ','
            << r.master_seed << '\n';
}

void write_csv(std::span<const SweepResult> rows, const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_csv(rows, out);
    out.flush();
    if (!out)
        throw std::runtime_error("write to " + path.string() + " failed");
}

std::vector<SweepResult> read_csv(std::istream &in)
{
    std::string line;
    if (!std::getline(in, line) || trim(line) != kCsvHeader)
        throw std::runtime_error("read_csv: missing or unexpected header");

    std::vector<SweepResult> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line))
    {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty())
            continue;
        const auto fields = split(text, ',');
        auto fail = [&](const std::string &why) {
            return std::runtime_error("read_csv: line " + std::to_string(line_no) + ": " + why);
        };
        if (fields.size() != 7)
            throw fail("expected 7 fields");

        SweepResult r;
        const auto scheme = parse_scheme(fields[0]);
        if (!scheme)
            throw fail("unknown scheme");
        r.scheme = *scheme;
        if (fields[1] == "power")
            r.kind = SweepKind::Power;
        else if (fields[1] == "rf")
            r.kind = SweepKind::Rf;
        else
            throw fail("unknown sweep kind");
        auto value = parse_number<double>(fields[2]);
        auto mean = parse_number<double>(fields[3]);
        auto sd = parse_number<double>(fields[4]);
        auto trials = parse_number<std::size_t>(fields[5]);
        auto seed = parse_number<std::uint64_t>(fields[6]);
        if (!value || !mean || !sd || !trials || !seed)
            throw fail("malformed number");
        r.swept_value = *value;
        r.mean_se = *mean;
        r.std_se = *sd;
        r.trials = *trials;
        r.master_seed = *seed;
        rows.push_back(r);
    }
    return rows;
}

std::vector<SweepResult> read_csv(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    return read_csv(in);
}

} // namespace dmabf
