// SPDX-License-Identifier: Apache-2.0
//
// ris-lab: RIS-assisted radar scattering and micro-Doppler simulator
// Copyright (C) 2026 The ris-lab authors
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

#include <rislab/analysis.hpp>
#include <rislab/dynamics.hpp>
#include <rislab/emfield.hpp>
#include <rislab/specgram.hpp>

namespace
{

void pattern_scan_dual(benchmark::State &state)
{
    const auto s = rislab::default_scenario();
    const double k0 = s.carrier.k0();
    const auto p = rislab::synthesize_profile(rislab::ProfileMode::DualBeamOneBit, {0.0, 45.0}, k0, s.ris.spacing_m,
                                              s.ris.element_count);
    for (auto _ : state)
        benchmark::DoNotOptimize(rislab::pattern_scan(p, {0.0, 1.0}, 1.0, s.ris, k0));
}
BENCHMARK(pattern_scan_dual)->Unit(benchmark::kMicrosecond);

void reference_rcs_table(benchmark::State &state)
{
    const auto s = rislab::default_scenario();
    const auto cases = rislab::reference_rcs_cases();
    for (auto _ : state)
        benchmark::DoNotOptimize(rislab::rcs_table(s, cases));
}
BENCHMARK(reference_rcs_table)->Unit(benchmark::kMicrosecond);

void slow_time_two_targets(benchmark::State &state)
{
    const auto s = rislab::default_scenario();
    for (auto _ : state)
        benchmark::DoNotOptimize(rislab::synthesize_slow_time(s, rislab::ProfileMode::DualBeamOneBit, {-45.0, 30.0}));
}
BENCHMARK(slow_time_two_targets)->Unit(benchmark::kMillisecond);

void spectrogram_default_window(benchmark::State &state)
{
    const auto s = rislab::default_scenario();
    const auto sig = rislab::synthesize_slow_time(s, rislab::ProfileMode::DualBeamOneBit, {-45.0, 30.0});
    for (auto _ : state)
        benchmark::DoNotOptimize(rislab::stft(sig));
}
BENCHMARK(spectrogram_default_window)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
