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

// Test-only reference implementations. Nothing here calls into the code path
// it is used to check.

#ifndef RISLAB_TESTS_ORACLES_HPP
#define RISLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

namespace oracle
{

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

inline double rad(double deg) { return deg * pi / 180.0; }

// Direct O(L^2) DFT, twiddle index reduced mod L to keep the argument small.
inline std::vector<cplx> naive_dft(const std::vector<cplx> &x)
{
    const std::size_t n = x.size();
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        cplx acc{0.0, 0.0};
        for (std::size_t m = 0; m < n; ++m)
        {
            const std::size_t idx = (k * m) % n;
            acc += x[m] * std::polar(1.0, -2.0 * pi * static_cast<double>(idx) / static_cast<double>(n));
        }
        out[k] = acc;
    }
    return out;
}

inline std::vector<double> hann(std::size_t n)
{
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = 0.5 * (1.0 - std::cos(2.0 * pi * static_cast<double>(i) / static_cast<double>(n)));
    return w;
}

// Far-field sum written from the wave vectors: each element at local
// (0, y_n) contributes exp(-j k_i . r) * exp(-j (k_s . r - zeta)).
inline cplx brute_force_scattered_field(const std::vector<double> &zeta_deg, double phi_i_deg, double phi_s_deg,
                                        double e0, double rho, double dy, double k0)
{
    const std::size_t n = zeta_deg.size();
    const double ki[2] = {-k0 * std::cos(rad(phi_i_deg)), -k0 * std::sin(rad(phi_i_deg))};
    const double ks[2] = {k0 * std::cos(rad(phi_s_deg)), k0 * std::sin(rad(phi_s_deg))};
    cplx sum{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
    {
        const double r[2] = {0.0, static_cast<double>(i) * dy - 0.5 * static_cast<double>(n - 1) * dy};
        const double ki_r = ki[0] * r[0] + ki[1] * r[1];
        const double ks_r = ks[0] * r[0] + ks[1] * r[1];
        sum += std::exp(cplx{0.0, -ki_r}) * std::exp(cplx{0.0, -(ks_r - rad(zeta_deg[i]))});
    }
    const cplx pref = cplx{0.0, 1.0} * k0 * e0 * std::cos(rad(phi_i_deg)) / (pi * std::sqrt(rho));
    return pref * sum * dy;
}

// Pearson correlation of x[0..n-lag) with x[lag..n).
inline double lagged_correlation(const std::vector<double> &x, std::size_t lag)
{
    const std::size_t n = x.size() - lag;
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        ma += x[i];
        mb += x[i + lag];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double a = x[i] - ma, b = x[i + lag] - mb;
        sab += a * b;
        saa += a * a;
        sbb += b * b;
    }
    return (saa > 0.0 && sbb > 0.0) ? sab / std::sqrt(saa * sbb) : 0.0;
}

// Period of a quasi-periodic track: the first local maximum of the lagged
// correlation after it has gone negative. Returns 0 when none is found.
// Lags leave at least min_overlap samples of overlap.
inline double autocorrelation_period(const std::vector<double> &track, double sample_period_s,
                                     std::size_t min_overlap = 10)
{
    if (track.size() <= min_overlap + 2)
        return 0.0;
    const std::size_t max_lag = track.size() - min_overlap;
    std::vector<double> c(max_lag + 1, 0.0);
    for (std::size_t lag = 1; lag <= max_lag; ++lag)
        c[lag] = lagged_correlation(track, lag);
    bool went_negative = false;
    for (std::size_t lag = 2; lag < max_lag; ++lag)
    {
        if (c[lag] < 0.0)
            went_negative = true;
        if (went_negative && c[lag] >= c[lag - 1] && c[lag] >= c[lag + 1] && c[lag] > 0.0)
            return static_cast<double>(lag) * sample_period_s;
    }
    return 0.0;
}

inline std::vector<cplx> random_signal(std::mt19937_64 &rng, std::size_t n)
{
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> s(n);
    for (auto &v : s)
        v = {g(rng), g(rng)};
    return s;
}

} // namespace oracle

#endif
