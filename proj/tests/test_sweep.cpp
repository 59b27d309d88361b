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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dmabf/errors.hpp"
#include "dmabf/seeding.hpp"
#include "dmabf/sweep.hpp"

using namespace dmabf;

namespace {

SystemConfig parse(const std::string &text)
{
    std::istringstream in(text);
    return parse_config(in);
}

std::filesystem::path temp_file(const std::string &name)
{
    return std::filesystem::temp_directory_path() / ("dmabf_test_" + name);
}

} // namespace

TEST(Config, EmptyFileGivesDefaults)
{
    const SystemConfig cfg = parse("");
    const SystemConfig def = SystemConfig::defaults();
    EXPECT_EQ(cfg.carrier_frequency, 28e9);
    EXPECT_EQ(cfg.n_strips, 10u);
    EXPECT_EQ(cfg.m_elements, 30u);
    EXPECT_DOUBLE_EQ(cfg.d_e, def.d_e);
    EXPECT_DOUBLE_EQ(cfg.d_s, def.d_s);
    EXPECT_EQ(cfg.n_paths, 12u);
    EXPECT_EQ(cfg.n_rf, 3u);
    EXPECT_DOUBLE_EQ(cfg.wg_attenuation, 0.6);
    EXPECT_DOUBLE_EQ(cfg.wg_wavenumber, 827.67);
    EXPECT_DOUBLE_EQ(cfg.noise_var, 1e-3);
    EXPECT_DOUBLE_EQ(cfg.convergence_eps, 1e-4);
    EXPECT_EQ(cfg.max_outer_iters, 100u);
}

TEST(Config, Overrides)
{
    const SystemConfig cfg = parse("# link\n"
                                   "n_rf = 3\n"
                                   "carrier_hz=60e9  # V band\n"
                                   "\n"
                                   "d_e_over_lambda=0.25\n"
                                   "noise_dbm=-10\n"
                                   "m_elements=8\n");
    EXPECT_EQ(cfg.n_rf, 3u);
    EXPECT_EQ(cfg.carrier_frequency, 60e9);
    EXPECT_DOUBLE_EQ(cfg.d_e, 0.25 * kSpeedOfLight / 60e9);
    EXPECT_DOUBLE_EQ(cfg.d_s, 0.5 * kSpeedOfLight / 60e9);
    EXPECT_NEAR(cfg.noise_var, 1e-4, 1e-18);
    EXPECT_EQ(cfg.m_elements, 8u);
}

TEST(Config, Errors)
{
    EXPECT_THROW(parse("n_rf=11\n"), ConfigError);
    EXPECT_THROW(parse("n_strips=4\nn_rf=5\n"), ConfigError);
    try
    {
        parse("n_rf=2\n\nbogus=1\n");
        FAIL() << "expected ConfigError";
    }
    catch (const ConfigError &e)
    {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse("n_rf\n"), ConfigError);
    EXPECT_THROW(parse("n_rf=two\n"), ConfigError);
    EXPECT_THROW(parse("n_rf=-1\n"), ConfigError);
    EXPECT_THROW(parse("n_rf=2\nn_rf=3\n"), ConfigError);
    EXPECT_THROW(parse("wg_beta=1e\n"), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/dmabf.cfg"), ConfigError);
}

TEST(Seeding, CounterBased)
{
    EXPECT_EQ(derive_seed(1, 2, Stream::Paths), derive_seed(1, 2, Stream::Paths));
    EXPECT_NE(derive_seed(1, 2, Stream::Paths), derive_seed(1, 3, Stream::Paths));
    EXPECT_NE(derive_seed(1, 2, Stream::Paths), derive_seed(2, 2, Stream::Paths));
    EXPECT_NE(derive_seed(1, 2, Stream::Paths), derive_seed(1, 2, Stream::DmaInit));
}

TEST(SweepSpec, Validation)
{
    const SystemConfig cfg = SystemConfig::defaults();
    SweepSpec spec;
    spec.schemes = {SchemeId::FullyDigital};
    EXPECT_THROW(spec.validate(cfg), ConfigError); // no values
    spec.values = {0.0, -5.0};
    EXPECT_THROW(spec.validate(cfg), ConfigError); // unsorted
    spec.values = {-5.0, 0.0};
    spec.trials = 0;
    EXPECT_THROW(spec.validate(cfg), ConfigError);
    spec.trials = 1;
    EXPECT_NO_THROW(spec.validate(cfg));
    spec.kind = SweepKind::Rf;
    spec.values = {1, 11};
    EXPECT_THROW(spec.validate(cfg), ConfigError);
    spec.values = {1, 2.5};
    EXPECT_THROW(spec.validate(cfg), ConfigError);
    spec.values = {1, 10};
    EXPECT_NO_THROW(spec.validate(cfg));
}

TEST(RunSweep, SingleRowIsReproducible)
{
    const SystemConfig cfg = SystemConfig::defaults();
    SweepSpec spec;
    spec.values = {0.0};
    spec.schemes = {SchemeId::Proposed};
    spec.trials = 1;
    spec.master_seed = 99;
    const auto a = run_sweep(cfg, spec);
    const auto b = run_sweep(cfg, spec);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a[0].std_se, 0.0);
    EXPECT_EQ(a[0].trials, 1u);
    EXPECT_EQ(a[0].master_seed, 99u);
}

TEST(RunSweep, ThreadCountDoesNotChangeResults)
{
    const SystemConfig cfg = SystemConfig::defaults();
    SweepSpec spec;
    spec.values = {-10.0, 10.0};
    spec.schemes = {SchemeId::Proposed, SchemeId::RandomSelection, SchemeId::PsHybridPartial};
    spec.trials = 6;
    spec.threads = 1;
    const auto serial = run_sweep(cfg, spec);
    spec.threads = 4;
    EXPECT_EQ(run_sweep(cfg, spec), serial);
}

TEST(RunSweep, FullyDigitalIncreasesWithPower)
{
    const SystemConfig cfg = SystemConfig::defaults();
    SweepSpec spec;
    spec.values = {-9.0, -6.0, -3.0, 0.0, 3.0};
    spec.schemes = {SchemeId::FullyDigital};
    spec.trials = 20;
    const auto rows = run_sweep(cfg, spec);
    ASSERT_EQ(rows.size(), 5u);
    for (std::size_t i = 1; i < rows.size(); ++i)
        EXPECT_GT(rows[i].mean_se, rows[i - 1].mean_se);
}

TEST(RunSweep, TrialMatchesRunTrial)
{
    const SystemConfig cfg = SystemConfig::defaults();
    SweepSpec spec;
    spec.values = {5.0};
    spec.schemes = {SchemeId::FullyDigital, SchemeId::DmaIncompact};
    spec.trials = 3;
    spec.master_seed = 4;
    const TrialTable table = run_sweep_trials(cfg, spec);
    SystemConfig at = cfg;
    at.tx_power = dbm_to_watts(5.0);
    const auto direct = run_trial(at, spec.schemes, 4, 2);
    EXPECT_EQ(table[0][0][2], direct[0]);
    EXPECT_EQ(table[0][1][2], direct[1]);
}

TEST(RunSweep, RfSweepRowsCarryChainCount)
{
    SystemConfig cfg = SystemConfig::defaults();
    SweepSpec spec;
    spec.kind = SweepKind::Rf;
    spec.values = {1, 3};
    spec.schemes = {SchemeId::Proposed, SchemeId::PsHybridPartial};
    spec.trials = 2;
    const auto rows = run_sweep(cfg, spec);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].swept_value, 1.0);
    EXPECT_EQ(rows[0].scheme, SchemeId::Proposed);
    EXPECT_EQ(rows[1].scheme, SchemeId::PsHybridPartial);
    EXPECT_EQ(rows[3].swept_value, 3.0);
    EXPECT_EQ(rows[3].kind, SweepKind::Rf);
}

TEST(Csv, HeaderOnlyForNoRows)
{
    std::ostringstream out;
    write_csv(std::vector<SweepResult>{}, out);
    EXPECT_EQ(out.str(), "scheme,sweep_kind,swept_value,mean_se,std_se,trials,master_seed\n");
    std::istringstream in(out.str());
    EXPECT_TRUE(read_csv(in).empty());
}

TEST(Csv, RoundTripIsExact)
{
    std::vector<SweepResult> rows;
    for (SchemeId id : {SchemeId::Proposed, SchemeId::DmaFullRf, SchemeId::PsHybridPartial})
        for (double v : {-10.0, -5.0, 0.0, 5.0, 10.0})
            rows.push_back({id, SweepKind::Power, v, 1.0 / 3.0 + v * 1e-7, std::sqrt(2.0) * 1e-5, 200,
                            18446744073709551615ull});
    const auto path = temp_file("roundtrip.csv");
    write_csv(rows, path);
    const auto back = read_csv(path);
    ASSERT_EQ(back.size(), 15u);
    EXPECT_EQ(back, rows);
    std::filesystem::remove(path);
}

TEST(Csv, NumberFormatting)
{
    std::ostringstream out;
    const std::vector<SweepResult> rows{{SchemeId::Proposed, SweepKind::Rf, 1234567.0, 0.1, 0.0, 3, 7}};
    write_csv(rows, out);
    const std::string text = out.str();
    EXPECT_NE(text.find("proposed,rf,1234567,0.10000000000000001,0,3,7"), std::string::npos) << text;
}

TEST(Csv, MalformedRowsAreRejected)
{
    std::istringstream bad_header("scheme,kind\n");
    EXPECT_THROW(read_csv(bad_header), std::runtime_error);
    std::istringstream bad_scheme(std::string(kCsvHeader) + "\nfoo,power,0,1,1,1,1\n");
    EXPECT_THROW(read_csv(bad_scheme), std::runtime_error);
    std::istringstream bad_count(std::string(kCsvHeader) + "\nproposed,power,0,1,1\n");
    EXPECT_THROW(read_csv(bad_count), std::runtime_error);
}
