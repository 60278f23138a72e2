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

#include "rislab/phasing.hpp"

#include "rislab/constants.hpp"
#include "rislab/csv.hpp"
#include "rislab/error.hpp"

#include <cmath>
#include <string>

namespace rislab
{

std::string_view to_string(ProfileMode mode)
{
    switch (mode)
    {
    case ProfileMode::Metal:
        return "metal";
    case ProfileMode::OneBeam:
        return "one";
    case ProfileMode::DualBeamOneBit:
        return "dual";
    }
    return "unknown";
}

ProfileMode parse_profile_mode(std::string_view name)
{
    if (name == "metal")
        return ProfileMode::Metal;
    if (name == "one")
        return ProfileMode::OneBeam;
    if (name == "dual")
        return ProfileMode::DualBeamOneBit;
    throw InvalidArgument("unknown profile mode '" + std::string(name) + "' (expected metal|one|dual)");
}

void validate(const SteeringCommand &cmd)
{
    if (!(std::abs(cmd.incidence_deg) < 90.0))
        throw InvalidArgument("angle out of half-space: incidence " + format_csv_number(cmd.incidence_deg) + " deg");
    if (!(std::abs(cmd.desired_deg) <= 90.0))
        throw InvalidArgument("desired angle must satisfy |phi_d| <= 90 (got " + format_csv_number(cmd.desired_deg) +
                              ")");
}

PhaseProfile metal_profile(int n_elements)
{
    if (n_elements < 1)
        throw InvalidArgument("element count must be >= 1");
    return PhaseProfile{ProfileMode::Metal, std::vector<double>(static_cast<std::size_t>(n_elements), 0.0),
                        std::nullopt};
}

PhaseProfile snell_profile(const SteeringCommand &cmd, double k0, double spacing_m, int n_elements)
{
    validate(cmd);
    if (n_elements < 1)
        throw InvalidArgument("element count must be >= 1");

    const double slope_rad = k0 * spacing_m * (std::sin(deg_to_rad(cmd.desired_deg)) - std::sin(deg_to_rad(cmd.incidence_deg)));
    const double slope_deg = rad_to_deg(slope_rad);

    PhaseProfile p{ProfileMode::OneBeam, {}, cmd};
    p.phases_deg.reserve(static_cast<std::size_t>(n_elements));
    for (int n = 0; n < n_elements; ++n)
        p.phases_deg.push_back(n * slope_deg);
    return p;
}

double wrap_degrees(double phase_deg)
{
    double w = std::fmod(phase_deg, 360.0);
    if (w < 0.0)
        w += 360.0;
    // fmod of a tiny negative value can round up to exactly 360
    if (w >= 360.0)
        w = 0.0;
    return w;
}

double quantize_phase_one_bit(double phase_deg)
{
    const double w = wrap_degrees(phase_deg);
    return (w >= 90.0 && w < 270.0) ? 180.0 : 0.0;
}

PhaseProfile quantize_one_bit(const PhaseProfile &profile)
{
    PhaseProfile q{ProfileMode::DualBeamOneBit, {}, profile.command};
    q.phases_deg.reserve(profile.size());
    for (double z : profile.phases_deg)
        q.phases_deg.push_back(quantize_phase_one_bit(z));
    return q;
}

double quantization_error(const PhaseProfile &ideal, const PhaseProfile &quantized)
{
    if (ideal.size() != quantized.size())
        throw InvalidArgument("quantization_error: profile lengths differ (" + std::to_string(ideal.size()) + " vs " +
                              std::to_string(quantized.size()) + ")");
    double total = 0.0;
    for (std::size_t n = 0; n < ideal.size(); ++n)
    {
        double d = wrap_degrees(ideal.phases_deg[n] - quantized.phases_deg[n]);
        if (d > 180.0)
            d = 360.0 - d;
        total += d * d;
    }
    return total;
}

PhaseProfile synthesize_profile(ProfileMode mode, const SteeringCommand &cmd, double k0, double spacing_m,
                                int n_elements)
{
    switch (mode)
    {
    case ProfileMode::Metal:
        validate(cmd);
        return metal_profile(n_elements);
    case ProfileMode::OneBeam:
        return snell_profile(cmd, k0, spacing_m, n_elements);
    case ProfileMode::DualBeamOneBit:
        return quantize_one_bit(snell_profile(cmd, k0, spacing_m, n_elements));
    }
    throw InvalidArgument("unknown profile mode");
}

void write_profile_csv(std::ostream &out, const PhaseProfile &ideal, const PhaseProfile &quantized)
{
    if (ideal.size() != quantized.size())
        throw InvalidArgument("write_profile_csv: profile lengths differ");
    out << "n,zeta_ideal_deg,zeta_quantized_deg\n";
    for (std::size_t n = 0; n < ideal.size(); ++n)
        out << (n + 1) << ',' << format_csv_number(ideal.phases_deg[n]) << ','
            << format_csv_number(quantized.phases_deg[n]) << '\n';
}

} // namespace rislab
