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

#ifndef RISLAB_CONSTANTS_HPP
#define RISLAB_CONSTANTS_HPP

#include <numbers>

namespace rislab
{

inline constexpr double pi = std::numbers::pi;

inline constexpr double speed_of_light = 299'792'458.0;  // m/s
inline constexpr double free_space_impedance = 376.730313; // Ohm

// Sentinel used in place of -inf when converting zero power to dB.
inline constexpr double db_floor_sentinel = -300.0;

constexpr double deg_to_rad(double deg) { return deg * (pi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / pi); }

} // namespace rislab

#endif
