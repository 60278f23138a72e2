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

#ifndef RISLAB_ANALYSIS_HPP
#define RISLAB_ANALYSIS_HPP

#include "rislab/emfield.hpp"
#include "rislab/phasing.hpp"
#include "rislab/scene.hpp"

#include <ostream>
#include <span>
#include <vector>

namespace rislab
{

struct Lobe
{
    double angle_deg = 0.0;
    double power_db = 0.0; // relative to the strongest lobe, <= 0
    int rank = 0;          // 0 = strongest
};

inline constexpr double default_lobe_floor_db = -10.0;

// Local maxima of |E_s| within floor_db of the pattern peak, refined by a
// three-point parabola in sin(phi) on the dB values.
//
// A run of equal samples counts as one maximum when both neighbours outside
// the run are lower (or absent); it is reported at its sample with the
// smallest |angle| and is not refined. Equal-power lobes are ranked by
// smaller |angle|, then by smaller angle.
std::vector<Lobe> find_lobes(const FarFieldPattern &pattern, double floor_db = default_lobe_floor_db);

// |angle of the lobe nearest desired_deg - desired_deg|.
double squint_error(std::span<const Lobe> lobes, double desired_deg);

// Scattering width 2 pi rho |E_s|^2 / E0^2, linear.
double rcs_linear(Complex scattered, const PlaneWave &wave, double rho_m);
// Same in dB, plus a constant calibration offset.
double rcs_db(Complex scattered, const PlaneWave &wave, double rho_m, double calibration_offset_db = 0.0);

// Reference distance used for every RCS evaluation; it cancels out of the
// ratio but keeps the fields at a physical scale.
inline constexpr double rcs_reference_distance_m = 1.0;

struct RcsEntry
{
    ProfileMode mode = ProfileMode::Metal;
    double incidence_deg = 0.0;
    double desired_deg = 0.0;
    double sigma_f_db = 0.0;
    double sigma_r_db = 0.0;
};

// Forward: incidence phi_i observed at phi_d. Reverse: incidence phi_d
// observed at phi_i. Both use the one profile synthesised for phi_i -> phi_d.
// Requires |phi_d| < 90 so the reverse leg is a valid incidence.
RcsEntry reciprocity_report(ProfileMode mode, const SteeringCommand &cmd, const ScenarioConfig &scenario);

struct RcsCase
{
    ProfileMode mode = ProfileMode::Metal;
    double incidence_deg = 0.0;
    double desired_deg = 0.0;
};

// The three angle pairs (-30, 30), (0, 30), (0, 45), each for metal, one-beam
// and dual-beam, angle-pair major.
std::vector<RcsCase> reference_rcs_cases();

std::vector<RcsEntry> rcs_table(const ScenarioConfig &scenario, std::span<const RcsCase> cases);

struct SweepRow
{
    double desired_deg = 0.0;
    std::vector<Lobe> lobes;
};

struct SweepOptions
{
    double grid_step_deg = default_grid_step_deg;
    double floor_db = default_lobe_floor_db;
    std::size_t max_lobes = 4;
};

std::vector<SweepRow> steering_sweep(ProfileMode mode, double incidence_deg, std::span<const double> desired_grid_deg,
                                     const ScenarioConfig &scenario, const SweepOptions &options = {});

// Uniform grid from -90 to 90 inclusive.
std::vector<double> uniform_angle_grid(double step_deg);

// phi_d_cmd_deg, rank, lobe_angle_deg, lobe_power_db
void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows);
// mode, phi_i_deg, phi_d_deg, sigma_f_db, sigma_r_db
void write_rcs_table_csv(std::ostream &out, std::span<const RcsEntry> table);
// rank, lobe_angle_deg, lobe_power_db
void write_lobes_csv(std::ostream &out, std::span<const Lobe> lobes);

} // namespace rislab

#endif
