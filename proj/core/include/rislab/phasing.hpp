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

#ifndef RISLAB_PHASING_HPP
#define RISLAB_PHASING_HPP

#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

namespace rislab
{

enum class ProfileMode
{
    Metal,
    OneBeam,
    DualBeamOneBit,
};

// "metal", "one", "dual"
std::string_view to_string(ProfileMode mode);
// Accepts the short names above; throws InvalidArgument otherwise.
ProfileMode parse_profile_mode(std::string_view name);

struct SteeringCommand
{
    double incidence_deg = 0.0;
    double desired_deg = 0.0;

    friend bool operator==(const SteeringCommand &, const SteeringCommand &) = default;
};

// |incidence| < 90, |desired| <= 90.
void validate(const SteeringCommand &cmd);

// Element phases in degrees, element 1 first (smallest y).
struct PhaseProfile
{
    ProfileMode mode = ProfileMode::Metal;
    std::vector<double> phases_deg;
    std::optional<SteeringCommand> command;

    std::size_t size() const { return phases_deg.size(); }
    friend bool operator==(const PhaseProfile &, const PhaseProfile &) = default;
};

PhaseProfile metal_profile(int n_elements);

// Linear phase gradient zeta_n = k0 (n-1) dy (sin phi_d - sin phi_i), in
// degrees and left unwrapped. zeta_1 is always 0.
PhaseProfile snell_profile(const SteeringCommand &cmd, double k0, double spacing_m, int n_elements);

// One-bit rule on the phase wrapped to [0, 360): 180 on [90, 270), else 0.
double quantize_phase_one_bit(double phase_deg);
PhaseProfile quantize_one_bit(const PhaseProfile &profile);

// Wrap to [0, 360).
double wrap_degrees(double phase_deg);

// Sum of squared shortest circular distances, in deg^2.
double quantization_error(const PhaseProfile &ideal, const PhaseProfile &quantized);

// Profile that a mode realises for a command: zeros, the Snell gradient, or
// its one-bit quantisation. Metal profiles carry no command.
PhaseProfile synthesize_profile(ProfileMode mode, const SteeringCommand &cmd, double k0, double spacing_m,
                                int n_elements);

// Columns n, zeta_ideal_deg, zeta_quantized_deg.
void write_profile_csv(std::ostream &out, const PhaseProfile &ideal, const PhaseProfile &quantized);

} // namespace rislab

#endif
