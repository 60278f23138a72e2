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

// 2-D TM scattering from a line of RIS elements.
//
// A z-polarised plane wave E0 exp(-j k_i . r) illuminates the RIS. Each
// element carries the surface current J_n = x × (H_r + H_i) and re-radiates
// with its programmed phase zeta_n. In the far field (cylindrical spreading)
//
//   E_s(phi_s) = j k0 E0 cos(phi_i) / (pi sqrt(rho)) * dy * sum_n exp(j psi_n),
//   psi_n      = zeta_n - k0 y_n (sin phi_s - sin phi_i),
//
// with y_n the element offset from the RIS centre. The incident phase term is
// what makes a metal plate (all zeta_n = 0) reflect into phi_s = phi_i.

#ifndef RISLAB_EMFIELD_HPP
#define RISLAB_EMFIELD_HPP

#include "rislab/constants.hpp"
#include "rislab/phasing.hpp"
#include "rislab/scene.hpp"

#include <complex>
#include <ostream>
#include <vector>

namespace rislab
{

using Complex = std::complex<double>;

// E_z of the incident wave at an arbitrary point.
Complex incident_field(const PlaneWave &wave, Point2 position, double k0);

// z-directed surface current density (A/m) for reflection coefficient -1.
// local_position is in the RIS frame, whose plane is x = 0; points off the
// plane are rejected. |J_z| = 2 (E0 / eta0) cos(phi_i).
Complex surface_current(const PlaneWave &wave, Point2 local_position, double k0,
                        double eta0 = free_space_impedance);

// Far-field E_z at observation angle phi_s (|phi_s| <= 90) and distance rho.
Complex scattered_field(const PhaseProfile &profile, const PlaneWave &wave, double observation_deg, double rho_m,
                        const RisGeometry &geometry, double k0);

struct FarFieldPattern
{
    std::vector<double> angles_deg; // strictly increasing
    std::vector<Complex> field;     // V/m, one per angle
    double rho_m = 1.0;
    PlaneWave excitation{};
    ProfileMode mode = ProfileMode::Metal;

    std::size_t size() const { return angles_deg.size(); }
};

inline constexpr double default_grid_step_deg = 0.1;

// Samples scattered_field on phi_s in [-90, 90] inclusive. 180 / grid_step
// must be a whole number and 0 < grid_step <= 1.
FarFieldPattern pattern_scan(const PhaseProfile &profile, const PlaneWave &wave, double rho_m,
                             const RisGeometry &geometry, double k0, double grid_step_deg = default_grid_step_deg);

// N k0 E0 dy |cos phi_i| / (pi sqrt(rho)): the fully coherent magnitude.
double coherent_field_bound(const PlaneWave &wave, double rho_m, const RisGeometry &geometry, double k0);

// 20 log10(|value| / reference), with zero mapped to db_floor_sentinel.
double magnitude_db(double magnitude, double reference);

// Columns phi_s_deg, re_v_per_m, im_v_per_m, power_db (peak-normalised).
void write_pattern_csv(std::ostream &out, const FarFieldPattern &pattern);

} // namespace rislab

#endif
