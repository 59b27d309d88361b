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

namespace dmabf {

// Independent random streams consumed within one Monte Carlo trial.
enum class Stream : std::uint64_t
{
    Paths = 1,
    DmaInit = 2,
    Subset = 3,
    IncompactInit = 4,
};

std::uint64_t splitmix64(std::uint64_t x);

// Counter-based seed: depends only on (master, trial, stream), never on execution order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial, Stream stream);

} // namespace dmabf
