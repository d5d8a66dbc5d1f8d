// SPDX-License-Identifier: Apache-2.0
//
// dpst - pulse shaping diversity simulator for dense small cell MIMO networks
// Copyright (C) 2026 The dpst authors
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

#include "dpst/channel.hpp"
#include "dpst/link.hpp"
#include "dpst/network.hpp"
#include "dpst/pulse.hpp"

#include <vector>

namespace
{

using dpst::numerics::ComplexMatrix;

void BM_KernelBuild(benchmark::State &state)
{
    dpst::pulse::PulseConfig cfg;
    cfg.tx_oversampling = static_cast<int>(state.range(0));
    cfg.rx_oversampling = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dpst::pulse::PulseKernels::build(cfg));
}
BENCHMARK(BM_KernelBuild)->Arg(2)->Arg(4)->Arg(8);

void BM_ComposeOversampled(benchmark::State &state)
{
    dpst::pulse::PulseConfig cfg;
    cfg.tx_oversampling = static_cast<int>(state.range(0));
    cfg.rx_oversampling = static_cast<int>(state.range(0));
    const auto kernels = dpst::pulse::PulseKernels::build(cfg);
    dpst::Rng rng(1);
    const ComplexMatrix h = dpst::channel::draw_fading({20.0, 0.5, dpst::channel::LosMode::RankOneLos}, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(dpst::pulse::compose_oversampled(h, kernels));
}
BENCHMARK(BM_ComposeOversampled)->Arg(2)->Arg(4)->Arg(8);

void BM_DownsizeFullSvd(benchmark::State &state)
{
    const auto kernels = dpst::pulse::PulseKernels::build({});
    const ComplexMatrix h = ComplexMatrix::Ones(2, 2);
    const ComplexMatrix os = dpst::pulse::oversampled_channel(h, kernels);
    for (auto _ : state)
        benchmark::DoNotOptimize(dpst::pulse::downsize_and_normalize(os, h));
}
BENCHMARK(BM_DownsizeFullSvd);

void BM_EvaluateLink(benchmark::State &state)
{
    const ComplexMatrix h = dpst::channel::ideal_channel(ComplexMatrix::Ones(2, 2));
    dpst::link::NoiseModel noise{1e-3, 1e-4 * ComplexMatrix::Identity(2, 2)};
    for (auto _ : state)
        benchmark::DoNotOptimize(dpst::link::evaluate_link(h, dpst::link::ChannelMode::Ideal, noise, 1.0, 10e6));
}
BENCHMARK(BM_EvaluateLink);

void BM_RunDrop(benchmark::State &state)
{
    const auto scenario = dpst::network::Scenario::build({}, {});
    const auto layout = dpst::network::build_layout(50.0);
    const dpst::link::ChannelMode modes[] = {dpst::link::ChannelMode::CorrelatedLos, dpst::link::ChannelMode::Dpst,
                                             dpst::link::ChannelMode::Ideal};
    dpst::Rng rng(3);
    for (auto _ : state)
    {
        const auto ue = dpst::network::drop_ue(layout, rng);
        benchmark::DoNotOptimize(dpst::network::run_drop(layout, ue, scenario, modes, rng));
    }
}
BENCHMARK(BM_RunDrop);

} // namespace

BENCHMARK_MAIN();
