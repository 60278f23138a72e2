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

#include <catch_amalgamated.hpp>

#include "support/oracles.hpp"

#include <rislab/csv.hpp>
#include <rislab/error.hpp>
#include <rislab/specgram.hpp>

#include <filesystem>

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

rislab::SlowTimeSignal tone(double freq_hz, double prf_hz, std::size_t n)
{
    rislab::SlowTimeSignal s{prf_hz, std::vector<rislab::Complex>(n)};
    for (std::size_t k = 0; k < n; ++k)
        s.samples[k] = std::polar(1.0, 2.0 * oracle::pi * freq_hz * static_cast<double>(k) / prf_hz);
    return s;
}

std::size_t loudest_bin(const rislab::Spectrogram &spec, std::size_t frame)
{
    std::size_t best = 0;
    for (std::size_t b = 1; b < spec.bins(); ++b)
        if (spec.at(frame, b) > spec.at(frame, best))
            best = b;
    return best;
}

std::filesystem::path scratch(const std::string &name)
{
    auto dir = std::filesystem::temp_directory_path() / "rislab_specgram_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("window sizes at the default PRF", "[specgram]")
{
    CHECK(rislab::window_samples({}, 1000.0) == 100);
    CHECK(rislab::hop_samples({}, 1000.0) == 10);
    CHECK_THROWS_AS(rislab::hop_samples({0.1, 0.2, rislab::WindowShape::Hann}, 1000.0), rislab::InvalidArgument);
    CHECK_THROWS_AS(rislab::window_samples({0.0001, 0.0001, rislab::WindowShape::Hann}, 1000.0),
                    rislab::InvalidArgument);
}

TEST_CASE("window coefficients", "[specgram]")
{
    const auto h = rislab::window_coefficients(rislab::WindowShape::Hann, 100);
    const auto ref = oracle::hann(100);
    for (std::size_t i = 0; i < h.size(); ++i)
        CHECK_THAT(h[i], WithinAbs(ref[i], 1e-15));
    CHECK(h[0] == 0.0);
    CHECK(h[50] == 1.0);
    CHECK(rislab::window_coefficients(rislab::WindowShape::Rect, 7) == std::vector<double>(7, 1.0));
}

TEST_CASE("frames agree with a direct DFT", "[specgram]")
{
    std::mt19937_64 rng(21);
    rislab::SlowTimeSignal sig{1000.0, oracle::random_signal(rng, 400)};
    const rislab::WindowSpec win{};
    const auto frames = rislab::stft_frames(sig, win);
    REQUIRE(frames.size() == 31);
    const auto w = oracle::hann(100);
    for (std::size_t k : {std::size_t{0}, std::size_t{13}, std::size_t{30}})
    {
        std::vector<oracle::cplx> seg(100);
        for (std::size_t n = 0; n < 100; ++n)
            seg[n] = sig.samples[k * 10 + n] * w[n];
        const auto ref = oracle::naive_dft(seg);
        for (std::size_t b = 0; b < 100; ++b)
        {
            const auto want = ref[(b + 50) % 100];
            CHECK(std::abs(frames[k][b] - want) <= 1e-10 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("axes", "[specgram]")
{
    const auto spec = rislab::stft(tone(0.0, 1000.0, 1500));
    REQUIRE(spec.bins() == 100);
    REQUIRE(spec.frames() == 141);
    CHECK(spec.freqs_hz.front() == -500.0);
    CHECK(spec.freqs_hz[50] == 0.0);
    CHECK(spec.freqs_hz.back() == 490.0);
    CHECK(spec.times_s.front() == 0.05);
    CHECK_THAT(spec.times_s.back(), WithinAbs(1.45, 1e-12));
    CHECK(spec.mags_db.size() == 141 * 100);
}

TEST_CASE("pure tones land in their bins", "[specgram]")
{
    const auto pos = rislab::stft(tone(40.0, 1000.0, 600));
    const auto neg = rislab::stft(tone(-80.0, 1000.0, 600));
    for (std::size_t k = 0; k < pos.frames(); ++k)
    {
        CHECK(pos.freqs_hz[loudest_bin(pos, k)] == 40.0);
        CHECK(neg.freqs_hz[loudest_bin(neg, k)] == -80.0);
        CHECK_THAT(pos.at(k, loudest_bin(pos, k)), WithinAbs(0.0, 1e-9));
    }
    double max_db = -1e9, min_db = 1e9;
    for (double v : pos.mags_db)
    {
        max_db = std::max(max_db, v);
        min_db = std::min(min_db, v);
    }
    CHECK(max_db == 0.0);
    CHECK(min_db == rislab::spectrogram_floor_db);
}

TEST_CASE("energy is preserved per frame", "[specgram][property]")
{
    std::mt19937_64 rng(8);
    rislab::SlowTimeSignal sig{1000.0, oracle::random_signal(rng, 300)};
    const auto frames = rislab::stft_frames(sig, {});
    const auto w = oracle::hann(100);
    for (std::size_t k = 0; k < frames.size(); ++k)
    {
        double time_energy = 0.0, freq_energy = 0.0;
        for (std::size_t n = 0; n < 100; ++n)
            time_energy += std::norm(sig.samples[k * 10 + n] * w[n]);
        for (const auto &x : frames[k])
            freq_energy += std::norm(x);
        CHECK_THAT(freq_energy, WithinRel(100.0 * time_energy, 1e-12));
    }
}

TEST_CASE("conjugating the signal mirrors the spectrum", "[specgram][property]")
{
    std::mt19937_64 rng(9);
    rislab::SlowTimeSignal sig{1000.0, oracle::random_signal(rng, 250)};
    auto conj = sig;
    for (auto &s : conj.samples)
        s = std::conj(s);
    const auto a = rislab::stft_frames(sig, {});
    const auto b = rislab::stft_frames(conj, {});
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t bin = 0; bin < 100; ++bin)
            CHECK_THAT(std::abs(b[k][(100 - bin) % 100]), WithinRel(std::abs(a[k][bin]), 1e-10));
}

TEST_CASE("delaying by one hop shifts the frames by one", "[specgram][property]")
{
    std::mt19937_64 rng(10);
    rislab::SlowTimeSignal sig{1000.0, oracle::random_signal(rng, 300)};
    auto delayed = sig;
    delayed.samples.insert(delayed.samples.begin(), 10, rislab::Complex{0.0, 0.0});
    const auto a = rislab::stft_frames(sig, {});
    const auto b = rislab::stft_frames(delayed, {});
    REQUIRE(b.size() == a.size() + 1);
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t bin = 0; bin < 100; ++bin)
            CHECK(std::abs(b[k + 1][bin] - a[k][bin]) <= 1e-12 * (1.0 + std::abs(a[k][bin])));
}

TEST_CASE("too-short signals are rejected", "[specgram]")
{
    CHECK_THROWS_WITH(rislab::stft(tone(0.0, 1000.0, 99)), ContainsSubstring("window needs 100"));
}

TEST_CASE("CSV layout and round trip", "[specgram]")
{
    const auto spec = rislab::stft(tone(40.0, 1000.0, 300), {0.1, 0.05, rislab::WindowShape::Hann});
    const auto text = rislab::spectrogram_csv(spec);
    CHECK(text.rfind("t_s,f_hz,mag_db\n0.05,-500,", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(1 + spec.frames() * spec.bins()));

    const auto path = scratch("roundtrip.csv");
    rislab::spectrogram_to_csv(spec, path);
    const auto back = rislab::read_spectrogram_csv(path);
    REQUIRE(back.frames() == spec.frames());
    REQUIRE(back.bins() == spec.bins());
    CHECK(back.times_s == spec.times_s);
    CHECK(back.freqs_hz == spec.freqs_hz);
    for (std::size_t i = 0; i < spec.mags_db.size(); ++i)
        CHECK_THAT(back.mags_db[i], WithinAbs(spec.mags_db[i], 1e-6));
    // the printed form is a fixed point of read then write
    CHECK(rislab::spectrogram_csv(back) == text);
}

TEST_CASE("empty spectrogram is a header-only CSV", "[specgram]")
{
    CHECK(rislab::spectrogram_csv(rislab::Spectrogram{}) == "t_s,f_hz,mag_db\n");
    const auto path = scratch("empty.csv");
    rislab::spectrogram_to_csv(rislab::Spectrogram{}, path);
    CHECK(rislab::read_spectrogram_csv(path).frames() == 0);
}

TEST_CASE("malformed spectrogram files", "[specgram]")
{
    const auto path = scratch("bad.csv");
    rislab::write_file_atomic(path, "t,f,m\n");
    CHECK_THROWS_WITH(rislab::read_spectrogram_csv(path), ContainsSubstring("not a spectrogram CSV"));
    rislab::write_file_atomic(path, "t_s,f_hz,mag_db\n0,1,x\n");
    CHECK_THROWS_WITH(rislab::read_spectrogram_csv(path), ContainsSubstring("malformed row 2"));
    rislab::write_file_atomic(path, "t_s,f_hz,mag_db\n0,1,0\n0,2,0\n1,1,0\n");
    CHECK_THROWS_WITH(rislab::read_spectrogram_csv(path), ContainsSubstring("ragged"));
    CHECK_THROWS_AS(rislab::read_spectrogram_csv(scratch("missing.csv")), rislab::IoError);
}
