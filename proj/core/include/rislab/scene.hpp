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

// Scenario description: carrier, RIS geometry, radar node and targets.
//
// Angle convention used throughout the library: every angle is in degrees,
// measured from the RIS normal (+x), positive toward +y. Incidence and
// observation angles share the sign convention, so the specular direction of
// an incidence angle phi_i is phi_s = phi_i.
//
// The RIS is a line array along y. Element 1 is the end with the smallest y.

#ifndef RISLAB_SCENE_HPP
#define RISLAB_SCENE_HPP

#include <array>
#include <cmath>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rislab
{

struct Point2
{
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

using Vector3 = std::array<double, 3>;

class CarrierConfig
{
  public:
    // Throws ConfigError unless frequency_hz is positive and finite.
    explicit CarrierConfig(double frequency_hz);

    double frequency_hz() const { return frequency_hz_; }
    double wavelength_m() const { return wavelength_m_; }
    double k0() const { return k0_; } // rad/m

  private:
    double frequency_hz_;
    double wavelength_m_;
    double k0_;
};

struct RisGeometry
{
    Point2 center{};
    int element_count = 1;
    double spacing_m = 0.0;

    double aperture_m() const { return element_count * spacing_m; }
};

struct PlaneWave
{
    double incidence_deg = 0.0;
    double amplitude_v_per_m = 1.0;
};

struct RadarNode
{
    Point2 position{};
    double tx_power_w = 2e-3;
    double tx_gain = 1.0;
    double rx_gain = 1.0;
};

// Circular micro-motion of a point target.
struct TargetTrajectory
{
    Point2 center{};
    double radius_m = 0.0;
    double omega_rad_s = 0.0;
    double rcs_sqm = 1.0;
};

// Optional complex white noise added to the slow-time return.
struct NoiseConfig
{
    double snr_db = 30.0;
    unsigned long long seed = 1;
};

struct ScenarioConfig
{
    CarrierConfig carrier{5.5e9};
    RisGeometry ris{};
    RadarNode radar{};
    std::vector<TargetTrajectory> targets;
    double prf_hz = 1000.0;
    double duration_s = 1.5;
    std::optional<NoiseConfig> noise;
    double calibration_offset_db = 0.0;
};

// The two-target scene used throughout: 5.5 GHz, 16 elements at 0.016 m
// centred on (-3, 2.7) m, radar at (-2.5, 4.3) m, targets rotating with
// r = 0.2 m about (-1, 2.1) m at 2*pi rad/s and (-1, 3.2) m at 4*pi rad/s.
ScenarioConfig default_scenario();

// Throws ConfigError naming the first violated invariant.
void validate(const PlaneWave &wave);
void validate(const RisGeometry &ris);
void validate(const ScenarioConfig &scenario);

// Largest two-way micro-Doppler any target can produce, 2*r*omega/lambda.
double max_predicted_doppler_hz(const ScenarioConfig &scenario);

ScenarioConfig parse_scenario(std::string_view text);
ScenarioConfig load_scenario(const std::filesystem::path &path);

// Emits every key with a round-trip exact number representation, so
// parse_scenario(serialize_scenario(s)) reproduces s bit for bit.
std::string serialize_scenario(const ScenarioConfig &scenario);

enum class WaveDirection
{
    Incident,
    Scattered
};

// Incident: k0*[-cos, -sin, 0]. Scattered: k0*[cos, sin, 0].
// Throws InvalidArgument when |angle_deg| >= 90.
Vector3 wave_vector(double angle_deg, double k0, WaveDirection direction);

// N collinear points along y, centred on ris.center, ordered by increasing y.
std::vector<Point2> element_positions(const RisGeometry &ris);

} // namespace rislab

#endif
