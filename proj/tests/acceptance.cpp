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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "dmabf/baselines.hpp"
#include "dmabf/optimizer.hpp"
#include "dmabf/seeding.hpp"
#include "dmabf/sweep.hpp"
#include "oracles.hpp"

using namespace dmabf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome
{
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(const std::string &name, const std::function<Outcome()> &check)
{
    const auto start = Clock::now();
    Outcome out;
    try
    {
        out = check();
    }
    catch (const std::exception &e)
    {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%s] %s: %s (%.1f s)\n", out.pass ? "PASS" : "FAIL", name.c_str(), out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.pass)
        ++failures;
}

std::string fmt(const char *format, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// 100 default-geometry instances shared by the feasibility and convergence criteria.
struct Instance
{
    ChannelRealization channel;
    OptimizeResult result;
};

std::vector<Instance> default_instances(double &elapsed)
{
    const auto start = Clock::now();
    const SystemConfig cfg = SystemConfig::defaults();
    std::vector<Instance> out;
    for (std::uint64_t i = 0; i < 100; ++i)
    {
        Rng paths(derive_seed(2024, i, Stream::Paths)), init(derive_seed(2024, i, Stream::DmaInit));
        Instance inst{make_channel(sample_paths(cfg, paths), cfg), {}};
        inst.result = optimize(inst.channel, cfg, init);
        out.push_back(std::move(inst));
    }
    elapsed = seconds_since(start);
    return out;
}

CVec random_cvec(std::size_t size, Rng &rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    CVec v(size);
    for (cplx &x : v)
        x = cplx(normal(rng), normal(rng));
    return v;
}

ChannelRealization raw_channel(std::size_t n, std::size_t m, CVec h)
{
    ChannelRealization ch;
    ch.n_strips = n;
    ch.m_elements = m;
    ch.intrinsic = h;
    ch.waveguide.assign(h.size(), cplx(1.0));
    ch.effective = std::move(h);
    return ch;
}

double mean_of(const std::vector<double> &x)
{
    double s = 0.0;
    for (double v : x)
        s += v;
    return s / double(x.size());
}

double std_error(const std::vector<double> &x)
{
    const double m = mean_of(x);
    double ss = 0.0;
    for (double v : x)
        ss += (v - m) * (v - m);
    return std::sqrt(ss / double(x.size() - 1)) / std::sqrt(double(x.size()));
}

std::size_t index_of(const std::vector<SchemeId> &schemes, SchemeId id)
{
    return static_cast<std::size_t>(std::find(schemes.begin(), schemes.end(), id) - schemes.begin());
}

std::string read_file(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

int main()
{
    const SystemConfig defaults = SystemConfig::defaults();
    constexpr std::size_t kTrials = 200;
    constexpr std::uint64_t kSeed = 20240601;

    double instance_secs = 0.0;
    const std::vector<Instance> instances = default_instances(instance_secs);

    report("feasibility (100 instances, N=10 M=30 N_RF=3)", [&] {
        double worst_power = 0.0, worst_circle = 0.0;
        std::size_t worst_support = 0, weights_checked = 0;
        for (const Instance &inst : instances)
        {
            const BeamformingSolution &sol = inst.result.solution;
            double power = 0.0;
            std::size_t support = 0;
            for (const cplx &x : sol.w)
            {
                power += std::norm(x);
                support += x != cplx(0.0);
            }
            worst_power = std::max(worst_power, std::abs(power - defaults.tx_power) / defaults.tx_power);
            worst_support = std::max(worst_support, support);
            for (const cplx &g : sol.weights.weights())
            {
                worst_circle = std::max(worst_circle, std::abs(std::abs(g - 0.5 * kJ) - 0.5));
                ++weights_checked;
            }
        }
        const bool pass = worst_power <= 1e-9 && worst_support <= 3 && worst_circle < 1e-9 &&
                          weights_checked == 100 * 300 && instance_secs < 60.0;
        return Outcome{pass, fmt("max rel power err %.2e, max support %zu, max circle err %.2e over %zu weights, "
                                 "optimize time %.1f s",
                                 worst_power, worst_support, worst_circle, weights_checked, instance_secs)};
    });

    report("monotone convergence (same 100 instances)", [&] {
        double worst_drop = 0.0;
        std::size_t most_iters = 0;
        for (const Instance &inst : instances)
        {
            const auto &t = inst.result.trace.snr_per_iteration;
            most_iters = std::max(most_iters, t.size());
            for (std::size_t i = 1; i < t.size(); ++i)
                worst_drop = std::max(worst_drop, t[i - 1] - t[i]);
        }
        return Outcome{worst_drop <= 1e-12 && most_iters <= 100 && most_iters >= 1,
                       fmt("largest SNR drop %.2e, most outer iterations %zu", worst_drop, most_iters)};
    });

    report("selection oracle (500 instances, N<=6 M<=3, exhaustive subsets)", [&] {
        Rng rng(kSeed);
        std::uniform_int_distribution<std::size_t> pick_n(1, 6), pick_m(1, 3);
        double worst = 0.0;
        for (int rep = 0; rep < 500; ++rep)
        {
            const std::size_t N = pick_n(rng), M = pick_m(rng);
            std::uniform_int_distribution<std::size_t> pick_rf(1, N);
            const std::size_t n_rf = pick_rf(rng);
            const auto ch = raw_channel(N, M, random_cvec(N * M, rng));
            SystemConfig cfg = defaults;
            cfg.n_strips = N;
            cfg.m_elements = M;
            const DmaWeights w = random_weights(cfg, rng);

            const auto active = select_strips(strip_gains(ch, w), n_rf);
            const double got = snr(ch, w, embed_w(mrt_beamformer(ch, w, active, 1.0), active, N), 1.0);
            CVec c(N);
            for (std::size_t n = 0; n < N; ++n)
                c[n] = effective_strip_channel(ch.strip(n), w.strip_weights(n));
            const double best = oracle::best_subset_snr(c, n_rf, 1.0, 1.0);
            worst = std::max(worst, std::abs(got - best) / best);
        }
        return Outcome{worst <= 1e-10, fmt("max relative gap to exhaustive optimum %.2e", worst)};
    });

    report("phase oracle (50 instances, N=1 M=2, 16 restarts vs 720x720 grid)", [&] {
        Rng rng(kSeed + 1);
        SystemConfig cfg = defaults;
        cfg.n_strips = 1;
        cfg.m_elements = 2;
        CoordinateAscentOptions tight;
        tight.eps = 0.0;
        tight.angle_tol = 1e-12;
        tight.max_sweeps = 1000000;
        const std::vector<std::size_t> only{0};

        double worst_ratio = 1e300, worst_angle = 0.0;
        for (int rep = 0; rep < 50; ++rep)
        {
            const CVec h = random_cvec(2, rng);
            const auto ch = raw_channel(1, 2, h);
            double best = 0.0;
            for (int restart = 0; restart < 16; ++restart)
            {
                const DmaWeights out = coordinate_ascent(ch, random_weights(cfg, rng), only, tight);
                best = std::max(best, std::norm(effective_strip_channel(h, out.weights())));
                for (std::size_t m = 0; m < 2; ++m)
                {
                    const cplx z = std::conj(h[m]) * std::conj(tilde_h(h, out.circle_vars(), m));
                    if (z == cplx(0.0))
                        continue;
                    const double want = -std::arg(z);
                    const double gap = std::abs(std::remainder(std::arg(out.circle_var(0, m)) - want, 2.0 * kPi));
                    worst_angle = std::max(worst_angle, gap);
                }
            }
            const double grid = oracle::two_element_grid_max(h[0], h[1], 720);
            worst_ratio = std::min(worst_ratio, best / grid);
        }
        return Outcome{worst_ratio >= 0.999 && worst_angle <= 1e-6,
                       fmt("min ratio to grid optimum %.6f, max optimality-condition residual %.2e rad",
                           worst_ratio, worst_angle)};
    });

    // Power sweep shared by the RF-reduction and ordering criteria.
    const std::vector<SchemeId> all(std::begin(kAllSchemes), std::end(kAllSchemes));
    SweepSpec power_spec;
    power_spec.kind = SweepKind::Power;
    power_spec.values = {-10.0, -5.0, 0.0, 5.0, 10.0};
    power_spec.schemes = all;
    power_spec.trials = kTrials;
    power_spec.master_seed = kSeed;
    const auto sweep_start = Clock::now();
    const TrialTable power_table = run_sweep_trials(defaults, power_spec);
    const double sweep_secs = seconds_since(sweep_start);

    const std::size_t i_prop = index_of(all, SchemeId::Proposed), i_full = index_of(all, SchemeId::DmaFullRf),
                      i_rand = index_of(all, SchemeId::RandomSelection),
                      i_fd = index_of(all, SchemeId::FullyDigital), i_ps = index_of(all, SchemeId::PsHybridPartial),
                      i_inc = index_of(all, SchemeId::DmaIncompact);

    report("RF reduction (N_RF=3 within 10% of N_RF=10, above random; -10..10 dBm, 200 trials)", [&] {
        bool pass = sweep_secs < 900.0;
        std::string detail;
        for (std::size_t v = 0; v < power_spec.values.size(); ++v)
        {
            const double prop = mean_of(power_table[v][i_prop]);
            const double full = mean_of(power_table[v][i_full]);
            const double rand = mean_of(power_table[v][i_rand]);
            const double rel = (full - prop) / full;
            pass = pass && rel <= 0.10 && prop > rand;
            detail += fmt("%s%+g dBm: proposed %.3f full-RF %.3f (gap %.1f%%) random %.3f", v ? "; " : "",
                          power_spec.values[v], prop, full, 100.0 * rel, rand);
        }
        return Outcome{pass, detail + fmt("; sweep time %.1f s", sweep_secs)};
    });

    report("diminishing returns in N_RF (0 dBm, 200 trials)", [&] {
        SweepSpec rf_spec;
        rf_spec.kind = SweepKind::Rf;
        for (int k = 1; k <= 10; ++k)
            rf_spec.values.push_back(k);
        rf_spec.schemes = {SchemeId::Proposed};
        rf_spec.trials = kTrials;
        rf_spec.master_seed = kSeed;
        SystemConfig cfg = defaults;
        cfg.tx_power = dbm_to_watts(0.0);
        const TrialTable table = run_sweep_trials(cfg, rf_spec);

        std::vector<double> mean, se;
        for (const auto &row : table)
        {
            mean.push_back(mean_of(row[0]));
            se.push_back(std_error(row[0]));
        }
        bool monotone = true;
        for (std::size_t k = 1; k < mean.size(); ++k)
            monotone = monotone && mean[k] >= mean[k - 1] - std::max(se[k], se[k - 1]);
        const double low = mean[4] - mean[0], high = mean[9] - mean[4];
        std::string curve;
        for (std::size_t k = 0; k < mean.size(); ++k)
            curve += fmt("%s%.3f", k ? " " : "", mean[k]);
        return Outcome{monotone && high < low,
                       fmt("gain 1->5 %.3f, gain 5->10 %.3f, monotone within 1 s.e.: %s; mean SE by N_RF: %s", low,
                           high, monotone ? "yes" : "no", curve.c_str())};
    });

    report("ordering (paired, 200 trials)", [&] {
        std::size_t violations = 0, pairs = 0;
        for (std::size_t v = 0; v < power_spec.values.size(); ++v)
            for (std::size_t t = 0; t < kTrials; ++t)
            {
                ++pairs;
                violations += power_table[v][i_full][t] < power_table[v][i_prop][t];
            }
        const std::size_t v0 = 2; // 0 dBm
        const double fd = mean_of(power_table[v0][i_fd]), ps = mean_of(power_table[v0][i_ps]);
        const double prop = mean_of(power_table[v0][i_prop]), inc = mean_of(power_table[v0][i_inc]);
        bool means_ok = true;
        for (std::size_t v = 0; v < power_spec.values.size(); ++v)
            means_ok = means_ok && mean_of(power_table[v][i_fd]) >= mean_of(power_table[v][i_ps]);
        return Outcome{violations == 0 && means_ok && prop >= inc,
                       fmt("full-RF < proposed in %zu of %zu realizations; at 0 dBm fully digital %.3f >= "
                           "phase-shifter %.3f, proposed %.3f >= incompact %.3f",
                           violations, pairs, fd, ps, prop, inc)};
    });

    report("determinism (identical config and seed give byte-identical CSV)", [&] {
        SweepSpec spec;
        spec.kind = SweepKind::Power;
        spec.values = {-10.0, 0.0, 10.0};
        spec.schemes = all;
        spec.trials = 5;
        spec.master_seed = 77;
        std::ostringstream a, b;
        write_csv(run_sweep(defaults, spec), a);
        spec.threads = 3;
        write_csv(run_sweep(defaults, spec), b);
        bool pass = a.str() == b.str() && !a.str().empty();
        std::string detail = fmt("library: %s", pass ? "identical" : "different");
#ifdef DMABF_CLI_PATH
        const auto dir = std::filesystem::temp_directory_path();
        const auto f1 = dir / "dmabf_accept_1.csv", f2 = dir / "dmabf_accept_2.csv";
        for (const auto &f : {f1, f2})
        {
            const std::string cmd = std::string("\"") + DMABF_CLI_PATH +
                                    "\" power-sweep --trials 5 --seed 77 --values=-10,0,10 --out \"" + f.string() +
                                    "\"";
            if (std::system(cmd.c_str()) != 0)
                return Outcome{false, "CLI invocation failed: " + cmd};
        }
        const std::string c1 = read_file(f1), c2 = read_file(f2);
        const bool cli_same = !c1.empty() && c1 == c2;
        pass = pass && cli_same && c1 == a.str();
        detail += fmt(", CLI power-sweep: %s (%zu bytes)", cli_same ? "identical" : "different", c1.size());
        std::filesystem::remove(f1);
        std::filesystem::remove(f2);
#endif
        return Outcome{pass, detail};
    });

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
