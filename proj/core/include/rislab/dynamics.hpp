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

// Target kinematics and the slow-time radar return through the RIS.
//
// Only the radar -> RIS -> target -> RIS -> radar path is modelled; targets
// are assumed hidden from the radar's line of sight. The RIS profile is fixed
// for the whole dwell.

#ifndef RISLAB_DYNAMICS_HPP
#define RISLAB_DYNAMICS_HPP

#include "rislab/emfield.hpp"
#include "rislab/phasing.hpp"
#include "rislab/scene.hpp"

#include <ostream>
#include <vector>

namespace rislab
{

// (cx + r cos wt, cy + r sin wt); t must be >= 0.
Point2 target_position(const TargetTrajectory &target, double t_s);

// Geometric angle of the RIS -> target direction from the RIS normal (+x),
// i.e. atan2(dy, dx) in degrees.
double target_angle_from_ris(const ScenarioConfig &scenario, const TargetTrajectory &target, double t_s);

// The scattering kernel exp(-j k_s . r) of the far-field sum radiates toward
// the mirror image of phi_s, so a target seen at geometric angle theta is
// sampled on the pattern at phi_s = -theta.
constexpr double pattern_angle_for_geometric(double geometric_deg) { return -geometric_deg; }

struct RangeEquationTerms
{
    double tx_power_w = 1.0;
    double tx_gain = 1.0;
    double rx_gain = 1.0;
    double sigma_forward = 1.0; // linear
    double sigma_reverse = 1.0; // linear
    double sigma_target_sqm = 1.0;
    double wavelength_m = 1.0;
    double radar_to_ris_m = 1.0;
    double ris_to_target_m = 1.0;
};

// P_tx G_tx G_rx sigma_f sigma_r sigma_t lambda^2 / ((4 pi)^5 r1^4 r2^4).
double received_power(const RangeEquationTerms &terms);

// Forward/reverse scattering widths of one profile as a function of the
// target's pattern angle, tabulated on a uniform angle grid and interpolated
// linearly in sin(phi).
class BeamCoverage
{
  public:
    BeamCoverage(const PhaseProfile &profile, double incidence_deg, const RisGeometry &ris, double k0,
                 double grid_step_deg = default_grid_step_deg);

    // sigma(phi_i -> phi), linear
    double forward(double pattern_angle_deg) const;
    // sigma(phi -> phi_i), linear; zero at grazing incidence
    double reverse(double pattern_angle_deg) const;

  private:
    double interpolate(const std::vector<double> &table, double angle_deg) const;

    std::vector<double> angles_deg_;
    std::vector<double> sines_;
    std::vector<double> forward_;
    std::vector<double> reverse_;
};

struct SlowTimeSignal
{
    double prf_hz = 1.0;
    std::vector<Complex> samples; // sqrt(W) with carrier phase

    std::size_t size() const { return samples.size(); }
    double time_s(std::size_t k) const { return static_cast<double>(k) / prf_hz; }
};

// floor(duration * prf) samples at t_k = k / prf:
//   s(t_k) = sum_targets sqrt(P_rx(t_k)) exp(-j 2 k0 (r1 + r2(t_k))),
// plus complex white noise when the scenario enables it.
SlowTimeSignal synthesize_slow_time(const ScenarioConfig &scenario, ProfileMode mode, const SteeringCommand &cmd);

// Noise-free contribution of a single target.
SlowTimeSignal synthesize_target_return(const ScenarioConfig &scenario, std::size_t target_index, ProfileMode mode,
                                        const SteeringCommand &cmd);

std::size_t slow_time_sample_count(const ScenarioConfig &scenario);

// t_s, re, im
void write_slow_time_csv(std::ostream &out, const SlowTimeSignal &signal);

} // namespace rislab

#endif
