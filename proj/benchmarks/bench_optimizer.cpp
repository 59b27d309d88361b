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

#include <benchmark/benchmark.h>

#include "dmabf/baselines.hpp"
#include "dmabf/optimizer.hpp"

namespace {

using namespace dmabf;

ChannelRealization default_channel(std::uint64_t seed)
{
    const SystemConfig cfg = SystemConfig::defaults();
    Rng rng(seed);
    return make_channel(sample_paths(cfg, rng), cfg);
}

void BM_MakeChannel(benchmark::State &state)
{
    const SystemConfig cfg = SystemConfig::defaults();
    Rng rng(1);
    const PathSet paths = sample_paths(cfg, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(make_channel(paths, cfg));
}
BENCHMARK(BM_MakeChannel);

void BM_CoordinateAscent(benchmark::State &state)
{
    const ChannelRealization ch = default_channel(2);
    const SystemConfig cfg = SystemConfig::defaults();
    Rng rng(3);
    const DmaWeights init = random_weights(cfg, rng);
    std::vector<std::size_t> active(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < active.size(); ++i)
        active[i] = i;
    for (auto _ : state)
        benchmark::DoNotOptimize(coordinate_ascent(ch, init, active));
}
BENCHMARK(BM_CoordinateAscent)->Arg(1)->Arg(3)->Arg(10);

void BM_Optimize(benchmark::State &state)
{
    const ChannelRealization ch = default_channel(4);
    SystemConfig cfg = SystemConfig::defaults();
    cfg.n_rf = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
    {
        Rng rng(5);
        benchmark::DoNotOptimize(optimize(ch, cfg, rng));
    }
}
BENCHMARK(BM_Optimize)->Arg(3)->Arg(10);

void BM_PsHybrid(benchmark::State &state)
{
    const SystemConfig cfg = SystemConfig::defaults();
    const SystemConfig hw = half_wavelength_geometry(cfg);
    Rng rng(6);
    const CVec h = intrinsic_channel(sample_paths(cfg, rng), hw);
    for (auto _ : state)
        benchmark::DoNotOptimize(ps_hybrid_partial(h, cfg, 3));
}
BENCHMARK(BM_PsHybrid);

} // namespace

BENCHMARK_MAIN();
