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

#include "rislab/dynamics.hpp"

#include "rislab/analysis.hpp"
#include "rislab/csv.hpp"
#include "rislab/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rislab
{

namespace
{

constexpr Complex j{0.0, 1.0};

void accumulate_target(const ScenarioConfig &scenario, const TargetTrajectory &target, const BeamCoverage &coverage,
                       std::vector<Complex> &samples)
{
    const double k0 = scenario.carrier.k0();
    const double r1 = distance(scenario.radar.position, scenario.ris.center);

    RangeEquationTerms terms;
    terms.tx_power_w = scenario.radar.tx_power_w;
    terms.tx_gain = scenario.radar.tx_gain;
    terms.rx_gain = scenario.radar.rx_gain;
    terms.sigma_target_sqm = target.rcs_sqm;
    terms.wavelength_m = scenario.carrier.wavelength_m();
    terms.radar_to_ris_m = r1;

    for (std::size_t k = 0; k < samples.size(); ++k)
    {
        const double t = static_cast<double>(k) / scenario.prf_hz;
        const Point2 p = target_position(target, t);
        const double r2 = distance(p, scenario.ris.center);
        const double phi = pattern_angle_for_geometric(target_angle_from_ris(scenario, target, t));

        terms.sigma_forward = coverage.forward(phi);
        terms.sigma_reverse = coverage.reverse(phi);
        terms.ris_to_target_m = r2;

        samples[k] += std::sqrt(received_power(terms)) * std::exp(-j * (2.0 * k0 * (r1 + r2)));
    }
}

BeamCoverage coverage_for(const ScenarioConfig &scenario, ProfileMode mode, const SteeringCommand &cmd)
{
    const auto &ris = scenario.ris;
    const double k0 = scenario.carrier.k0();
    return BeamCoverage(synthesize_profile(mode, cmd, k0, ris.spacing_m, ris.element_count), cmd.incidence_deg, ris,
                        k0);
}

} // namespace

Point2 target_position(const TargetTrajectory &target, double t_s)
{
    if (!(t_s >= 0.0))
        throw InvalidArgument("target_position: time must be >= 0");
    const double a = target.omega_rad_s * t_s;
    return {target.center.x + target.radius_m * std::cos(a), target.center.y + target.radius_m * std::sin(a)};
}

double target_angle_from_ris(const ScenarioConfig &scenario, const TargetTrajectory &target, double t_s)
{
    const Point2 d = target_position(target, t_s) - scenario.ris.center;
    if (d.x == 0.0 && d.y == 0.0)
        throw InvalidArgument("target coincides with the RIS centre");
    return rad_to_deg(std::atan2(d.y, d.x));
}

double received_power(const RangeEquationTerms &t)
{
    if (!(t.radar_to_ris_m > 0.0) || !(t.ris_to_target_m > 0.0))
        throw InvalidArgument("received_power: nonpositive distance");
    for (double v : {t.tx_power_w, t.tx_gain, t.rx_gain, t.sigma_forward, t.sigma_reverse, t.sigma_target_sqm,
                     t.wavelength_m})
        if (!(v >= 0.0) || !std::isfinite(v))
            throw InvalidArgument("received_power: terms must be finite and non-negative");

    const double four_pi = 4.0 * pi;
    const double r1_2 = t.radar_to_ris_m * t.radar_to_ris_m;
    const double r2_2 = t.ris_to_target_m * t.ris_to_target_m;
    return t.tx_power_w * t.tx_gain * t.rx_gain * t.sigma_forward * t.sigma_reverse * t.sigma_target_sqm *
           t.wavelength_m * t.wavelength_m / (std::pow(four_pi, 5) * r1_2 * r1_2 * r2_2 * r2_2);
}

BeamCoverage::BeamCoverage(const PhaseProfile &profile, double incidence_deg, const RisGeometry &ris, double k0,
                           double grid_step_deg)
    : angles_deg_(uniform_angle_grid(grid_step_deg))
{
    const double rho = rcs_reference_distance_m;
    const PlaneWave forward_wave{incidence_deg, 1.0};
    validate(forward_wave);

    sines_.reserve(angles_deg_.size());
    forward_.reserve(angles_deg_.size());
    reverse_.reserve(angles_deg_.size());
    for (double phi : angles_deg_)
    {
        sines_.push_back(std::sin(deg_to_rad(phi)));
        forward_.push_back(rcs_linear(scattered_field(profile, forward_wave, phi, rho, ris, k0), forward_wave, rho));
        if (std::abs(phi) < 90.0)
        {
            const PlaneWave reverse_wave{phi, 1.0};
            reverse_.push_back(
                rcs_linear(scattered_field(profile, reverse_wave, incidence_deg, rho, ris, k0), reverse_wave, rho));
        }
        else
        {
            reverse_.push_back(0.0);
        }
    }
}

double BeamCoverage::forward(double pattern_angle_deg) const { return interpolate(forward_, pattern_angle_deg); }

double BeamCoverage::reverse(double pattern_angle_deg) const { return interpolate(reverse_, pattern_angle_deg); }

double BeamCoverage::interpolate(const std::vector<double> &table, double angle_deg) const
{
    if (!(std::abs(angle_deg) <= 90.0))
        throw InvalidArgument("BeamCoverage: angle outside [-90, 90]");
    const std::size_t last = angles_deg_.size() - 1;
    const double step = angles_deg_[1] - angles_deg_[0];
    auto i = static_cast<std::size_t>(std::clamp(std::floor((angle_deg + 90.0) / step), 0.0, double(last - 1)));
    // guard the rounding of (angle + 90) / step
    while (i > 0 && angle_deg < angles_deg_[i])
        --i;
    while (i + 1 < last && angle_deg > angles_deg_[i + 1])
        ++i;

    const double s = std::sin(deg_to_rad(angle_deg));
    const double w = std::clamp((s - sines_[i]) / (sines_[i + 1] - sines_[i]), 0.0, 1.0);
    return (1.0 - w) * table[i] + w * table[i + 1];
}

std::size_t slow_time_sample_count(const ScenarioConfig &scenario)
{
    // the epsilon keeps e.g. 1.5 s * 1000 Hz from flooring to 1499
    return static_cast<std::size_t>(std::floor(scenario.duration_s * scenario.prf_hz * (1.0 + 1e-12)));
}

SlowTimeSignal synthesize_target_return(const ScenarioConfig &scenario, std::size_t target_index, ProfileMode mode,
                                        const SteeringCommand &cmd)
{
    validate(scenario);
    if (target_index >= scenario.targets.size())
        throw InvalidArgument("target index out of range");
    const BeamCoverage coverage = coverage_for(scenario, mode, cmd);
    SlowTimeSignal signal{scenario.prf_hz, std::vector<Complex>(slow_time_sample_count(scenario))};
    accumulate_target(scenario, scenario.targets[target_index], coverage, signal.samples);
    return signal;
}

SlowTimeSignal synthesize_slow_time(const ScenarioConfig &scenario, ProfileMode mode, const SteeringCommand &cmd)
{
    validate(scenario);
    const BeamCoverage coverage = coverage_for(scenario, mode, cmd);
    SlowTimeSignal signal{scenario.prf_hz, std::vector<Complex>(slow_time_sample_count(scenario))};
    for (const auto &target : scenario.targets)
        accumulate_target(scenario, target, coverage, signal.samples);

    if (scenario.noise && !signal.samples.empty())
    {
        double mean_power = 0.0;
        for (const auto &s : signal.samples)
            mean_power += std::norm(s);
        mean_power /= static_cast<double>(signal.size());

        const double noise_power = mean_power / std::pow(10.0, scenario.noise->snr_db / 10.0);
        std::mt19937_64 rng(scenario.noise->seed);
        std::normal_distribution<double> gauss(0.0, std::sqrt(noise_power / 2.0));
        for (auto &s : signal.samples)
        {
            const double re = gauss(rng);
            const double im = gauss(rng);
            s += Complex{re, im};
        }
    }
    return signal;
}

void write_slow_time_csv(std::ostream &out, const SlowTimeSignal &signal)
{
    out << "t_s,re,im\n";
    for (std::size_t k = 0; k < signal.size(); ++k)
        out << format_csv_number(signal.time_s(k)) << ',' << format_csv_number(signal.samples[k].real()) << ','
            << format_csv_number(signal.samples[k].imag()) << '\n';
}

} // namespace rislab
