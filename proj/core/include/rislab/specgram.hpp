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

// Short-time Fourier transform of a slow-time signal.
//
// Frame k holds samples [k*hop, k*hop + L) multiplied by the window and is
// transformed with the unnormalised DFT
//
//   X[m] = sum_n x[n] w[n] exp(-j 2 pi m n / L),
//
// so that sum |X|^2 = L * sum |x w|^2. Bins are reordered with zero Doppler
// in the middle: bin b carries frequency (b - floor(L/2)) * prf / L, covering
// [-prf/2, prf/2).

#ifndef RISLAB_SPECGRAM_HPP
#define RISLAB_SPECGRAM_HPP

#include "rislab/dynamics.hpp"

#include <complex>
#include <filesystem>
#include <vector>

namespace rislab
{

enum class WindowShape
{
    Hann,
    Rect,
};

struct WindowSpec
{
    double duration_s = 0.1;
    double hop_s = 0.01;
    WindowShape shape = WindowShape::Hann;
};

inline constexpr double spectrogram_floor_db = -80.0;

struct Spectrogram
{
    std::vector<double> times_s; // frame centres
    std::vector<double> freqs_hz;
    std::vector<double> mags_db; // frames x bins, row-major, 0 dB = global maximum

    std::size_t frames() const { return times_s.size(); }
    std::size_t bins() const { return freqs_hz.size(); }
    double at(std::size_t frame, std::size_t bin) const { return mags_db[frame * bins() + bin]; }
};

// Periodic (DFT-even) Hann, or all ones.
std::vector<double> window_coefficients(WindowShape shape, std::size_t length);

// Window and hop lengths in samples at a given PRF; throws InvalidArgument
// unless 0 < hop <= duration and both round to at least one sample.
std::size_t window_samples(const WindowSpec &window, double prf_hz);
std::size_t hop_samples(const WindowSpec &window, double prf_hz);

// Complex frames, zero-Doppler-centred bin order. Throws InvalidArgument
// when the signal is shorter than one window.
std::vector<std::vector<std::complex<double>>> stft_frames(const SlowTimeSignal &signal, const WindowSpec &window);

Spectrogram stft(const SlowTimeSignal &signal, const WindowSpec &window = {});

// Long format t_s, f_hz, mag_db, time-major.
void spectrogram_to_csv(const Spectrogram &spec, const std::filesystem::path &path);
std::string spectrogram_csv(const Spectrogram &spec);
Spectrogram read_spectrogram_csv(const std::filesystem::path &path);

} // namespace rislab

#endif
