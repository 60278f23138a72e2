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

#include "rislab/specgram.hpp"

#include "rislab/csv.hpp"
#include "rislab/error.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

namespace rislab
{

namespace
{

// FFTW's planner is not thread safe.
std::mutex &planner_mutex()
{
    static std::mutex m;
    return m;
}

class ForwardFft
{
  public:
    explicit ForwardFft(std::size_t n) : n_(n)
    {
        std::lock_guard lock(planner_mutex());
        in_ = fftw_alloc_complex(n);
        out_ = fftw_alloc_complex(n);
        plan_ = fftw_plan_dft_1d(static_cast<int>(n), in_, out_, FFTW_FORWARD, FFTW_ESTIMATE);
        if (plan_ == nullptr)
        {
            fftw_free(in_);
            fftw_free(out_);
            throw Error("FFTW planning failed");
        }
    }
    ~ForwardFft()
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
        fftw_free(in_);
        fftw_free(out_);
    }
    ForwardFft(const ForwardFft &) = delete;
    ForwardFft &operator=(const ForwardFft &) = delete;

    std::complex<double> *input() { return reinterpret_cast<std::complex<double> *>(in_); }
    const std::complex<double> *output() const { return reinterpret_cast<const std::complex<double> *>(out_); }
    void execute() { fftw_execute(plan_); }
    std::size_t size() const { return n_; }

  private:
    std::size_t n_;
    fftw_complex *in_ = nullptr;
    fftw_complex *out_ = nullptr;
    fftw_plan plan_ = nullptr;
};

std::size_t to_samples(double seconds, double prf_hz) { return static_cast<std::size_t>(std::llround(seconds * prf_hz)); }

} // namespace

std::vector<double> window_coefficients(WindowShape shape, std::size_t length)
{
    std::vector<double> w(length, 1.0);
    if (shape == WindowShape::Hann)
        for (std::size_t n = 0; n < length; ++n)
            w[n] = 0.5 - 0.5 * std::cos(2.0 * pi * static_cast<double>(n) / static_cast<double>(length));
    return w;
}

std::size_t window_samples(const WindowSpec &window, double prf_hz)
{
    if (!(window.duration_s > 0.0) || !(prf_hz > 0.0))
        throw InvalidArgument("window duration and prf must be > 0");
    const std::size_t n = to_samples(window.duration_s, prf_hz);
    if (n < 1)
        throw InvalidArgument("window is shorter than one sample");
    return n;
}

std::size_t hop_samples(const WindowSpec &window, double prf_hz)
{
    if (!(window.hop_s > 0.0 && window.hop_s <= window.duration_s))
        throw InvalidArgument("window hop must satisfy 0 < hop <= duration");
    const std::size_t n = to_samples(window.hop_s, prf_hz);
    if (n < 1)
        throw InvalidArgument("window hop is shorter than one sample");
    return n;
}

std::vector<std::vector<std::complex<double>>> stft_frames(const SlowTimeSignal &signal, const WindowSpec &window)
{
    const std::size_t len = window_samples(window, signal.prf_hz);
    const std::size_t hop = hop_samples(window, signal.prf_hz);
    if (signal.size() < len)
        throw InvalidArgument("signal has " + std::to_string(signal.size()) + " samples, window needs " +
                              std::to_string(len));

    const auto w = window_coefficients(window.shape, len);
    const std::size_t frames = (signal.size() - len) / hop + 1;
    const std::size_t centre = len / 2;

    ForwardFft fft(len);
    std::vector<std::vector<std::complex<double>>> out(frames, std::vector<std::complex<double>>(len));
    for (std::size_t k = 0; k < frames; ++k)
    {
        const std::size_t start = k * hop;
        for (std::size_t n = 0; n < len; ++n)
            fft.input()[n] = signal.samples[start + n] * w[n];
        fft.execute();
        // bin b holds DFT index (b - centre) mod len
        for (std::size_t b = 0; b < len; ++b)
            out[k][b] = fft.output()[(b + len - centre) % len];
    }
    return out;
}

Spectrogram stft(const SlowTimeSignal &signal, const WindowSpec &window)
{
    const auto frames = stft_frames(signal, window);
    const std::size_t len = window_samples(window, signal.prf_hz);
    const std::size_t hop = hop_samples(window, signal.prf_hz);
    const auto centre = static_cast<long long>(len / 2);

    Spectrogram spec;
    spec.freqs_hz.reserve(len);
    for (std::size_t b = 0; b < len; ++b)
        spec.freqs_hz.push_back(static_cast<double>(static_cast<long long>(b) - centre) * signal.prf_hz /
                                static_cast<double>(len));
    spec.times_s.reserve(frames.size());
    for (std::size_t k = 0; k < frames.size(); ++k)
        spec.times_s.push_back((static_cast<double>(k * hop) + 0.5 * static_cast<double>(len)) / signal.prf_hz);

    double peak = 0.0;
    for (const auto &f : frames)
        for (const auto &x : f)
            peak = std::max(peak, std::abs(x));

    spec.mags_db.reserve(frames.size() * len);
    for (const auto &f : frames)
        for (const auto &x : f)
        {
            const double m = std::abs(x);
            const double db = (peak > 0.0 && m > 0.0) ? 20.0 * std::log10(m / peak) : spectrogram_floor_db;
            spec.mags_db.push_back(std::max(db, spectrogram_floor_db));
        }
    return spec;
}

std::string spectrogram_csv(const Spectrogram &spec)
{
    std::ostringstream out;
    out << "t_s,f_hz,mag_db\n";
    for (std::size_t k = 0; k < spec.frames(); ++k)
        for (std::size_t b = 0; b < spec.bins(); ++b)
            out << format_csv_number(spec.times_s[k]) << ',' << format_csv_number(spec.freqs_hz[b]) << ','
                << format_csv_number(spec.at(k, b)) << '\n';
    return out.str();
}

void spectrogram_to_csv(const Spectrogram &spec, const std::filesystem::path &path)
{
    write_file_atomic(path, spectrogram_csv(spec));
}

Spectrogram read_spectrogram_csv(const std::filesystem::path &path)
{
    const std::string text = read_file(path);
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "t_s,f_hz,mag_db")
        throw IoError(path.string() + ": not a spectrogram CSV");

    Spectrogram spec;
    std::size_t rows = 0;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        const auto fields = split_csv_line(line);
        double t = 0.0, f = 0.0, m = 0.0;
        if (fields.size() != 3 || !parse_number(fields[0], t) || !parse_number(fields[1], f) ||
            !parse_number(fields[2], m))
            throw IoError(path.string() + ": malformed row " + std::to_string(rows + 2));
        if (spec.times_s.empty() || spec.times_s.back() != t)
            spec.times_s.push_back(t);
        if (spec.times_s.size() == 1)
            spec.freqs_hz.push_back(f);
        spec.mags_db.push_back(m);
        ++rows;
    }
    if (rows != spec.frames() * spec.bins())
        throw IoError(path.string() + ": ragged spectrogram");
    return spec;
}

} // namespace rislab
