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

#include "rislab/emfield.hpp"

#include "rislab/csv.hpp"
#include "rislab/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rislab
{

namespace
{

constexpr Complex j{0.0, 1.0};
constexpr double reflection_coefficient = -1.0;

double dot(const Vector3 &k, Point2 r) { return k[0] * r.x + k[1] * r.y; }

} // namespace

Complex incident_field(const PlaneWave &wave, Point2 position, double k0)
{
    validate(wave);
    const Vector3 ki = wave_vector(wave.incidence_deg, k0, WaveDirection::Incident);
    return wave.amplitude_v_per_m * std::exp(-j * dot(ki, position));
}

Complex surface_current(const PlaneWave &wave, Point2 local_position, double k0, double eta0)
{
    validate(wave);
    if (std::abs(local_position.x) > 1e-12)
        throw InvalidArgument("surface_current: position is not on the RIS plane (x = " +
                              format_csv_number(local_position.x) + ")");
    if (!(eta0 > 0.0))
        throw InvalidArgument("surface_current: wave impedance must be > 0");

    const double phi = deg_to_rad(wave.incidence_deg);
    const double h0 = wave.amplitude_v_per_m / eta0;
    const Vector3 ki = wave_vector(wave.incidence_deg, k0, WaveDirection::Incident);
    // reflected wave vector mirrors the normal component: k0 [cos, -sin, 0]
    const Vector3 kr = {-ki[0], ki[1], 0.0};

    // x × H picks the y component of H as J_z.
    const Complex hy_incident = h0 * std::cos(phi) * std::exp(-j * dot(ki, local_position));
    const Complex hy_reflected = reflection_coefficient * h0 * (-std::cos(phi)) * std::exp(-j * dot(kr, local_position));
    return hy_incident + hy_reflected;
}

Complex scattered_field(const PhaseProfile &profile, const PlaneWave &wave, double observation_deg, double rho_m,
                        const RisGeometry &geometry, double k0)
{
    validate(wave);
    if (!(rho_m > 0.0))
        throw InvalidArgument("nonpositive reference distance");
    if (!(std::abs(observation_deg) <= 90.0))
        throw InvalidArgument("observation angle must satisfy |phi_s| <= 90 (got " + format_csv_number(observation_deg) +
                              ")");
    if (profile.size() != static_cast<std::size_t>(geometry.element_count))
        throw InvalidArgument("profile has " + std::to_string(profile.size()) + " phases for " +
                              std::to_string(geometry.element_count) + " elements");

    const auto positions = element_positions(geometry);
    const double phi_i = deg_to_rad(wave.incidence_deg);
    const double du = std::sin(deg_to_rad(observation_deg)) - std::sin(phi_i);

    Complex sum{0.0, 0.0};
    for (std::size_t n = 0; n < positions.size(); ++n)
    {
        const double y = positions[n].y - geometry.center.y;
        const double psi = deg_to_rad(profile.phases_deg[n]) - k0 * y * du;
        sum += std::polar(1.0, psi);
    }

    const double scale = k0 * wave.amplitude_v_per_m * std::cos(phi_i) * geometry.spacing_m / (pi * std::sqrt(rho_m));
    return j * scale * sum;
}

FarFieldPattern pattern_scan(const PhaseProfile &profile, const PlaneWave &wave, double rho_m,
                             const RisGeometry &geometry, double k0, double grid_step_deg)
{
    if (!(grid_step_deg > 0.0 && grid_step_deg <= 1.0))
        throw InvalidArgument("grid step must satisfy 0 < step <= 1 deg");
    const double steps = 180.0 / grid_step_deg;
    const long long n = std::llround(steps);
    if (std::abs(steps - static_cast<double>(n)) > 1e-9 * steps)
        throw InvalidArgument("grid step must divide 180 deg evenly");

    FarFieldPattern pattern;
    pattern.rho_m = rho_m;
    pattern.excitation = wave;
    pattern.mode = profile.mode;
    pattern.angles_deg.reserve(static_cast<std::size_t>(n + 1));
    pattern.field.reserve(static_cast<std::size_t>(n + 1));
    for (long long i = 0; i <= n; ++i)
    {
        const double angle = -90.0 + 180.0 * static_cast<double>(i) / static_cast<double>(n);
        pattern.angles_deg.push_back(angle);
        pattern.field.push_back(scattered_field(profile, wave, angle, rho_m, geometry, k0));
    }
    return pattern;
}

double coherent_field_bound(const PlaneWave &wave, double rho_m, const RisGeometry &geometry, double k0)
{
    return geometry.element_count * k0 * wave.amplitude_v_per_m * geometry.spacing_m *
           std::abs(std::cos(deg_to_rad(wave.incidence_deg))) / (pi * std::sqrt(rho_m));
}

double magnitude_db(double magnitude, double reference)
{
    if (!(magnitude > 0.0) || !(reference > 0.0))
        return db_floor_sentinel;
    return std::max(20.0 * std::log10(magnitude / reference), db_floor_sentinel);
}

void write_pattern_csv(std::ostream &out, const FarFieldPattern &pattern)
{
    double peak = 0.0;
    for (const auto &e : pattern.field)
        peak = std::max(peak, std::abs(e));

    out << "phi_s_deg,re_v_per_m,im_v_per_m,power_db\n";
    for (std::size_t i = 0; i < pattern.size(); ++i)
    {
        const Complex e = pattern.field[i];
        out << format_csv_number(pattern.angles_deg[i]) << ',' << format_csv_number(e.real()) << ','
            << format_csv_number(e.imag()) << ',' << format_csv_number(magnitude_db(std::abs(e), peak)) << '\n';
    }
}

} // namespace rislab
