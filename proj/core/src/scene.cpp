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

#include "rislab/scene.hpp"

#include "rislab/constants.hpp"
#include "rislab/csv.hpp"
#include "rislab/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace rislab
{

namespace
{

std::string num(double v) { return format_exact_number(v); }

void require(bool ok, const std::string &what)
{
    if (!ok)
        throw ConfigError(what);
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

constexpr std::array<std::string_view, 12> required_keys = {
    "frequency_hz", "ris.center_x_m", "ris.center_y_m", "ris.n",      "ris.dy_m", "radar.x_m",
    "radar.y_m",    "radar.ptx_w",    "radar.gtx",      "radar.grx", "prf_hz",   "duration_s",
};

constexpr std::array<std::string_view, 3> optional_keys = {
    "calibration_offset_db",
    "noise.snr_db",
    "noise.seed",
};

constexpr std::array<std::string_view, 5> target_fields = {
    "center_x_m", "center_y_m", "radius_m", "omega_rad_s", "rcs_sqm",
};

// "target.<i>.<field>" -> (i, field); nullopt if the key has another shape.
std::optional<std::pair<int, std::string>> split_target_key(std::string_view key)
{
    constexpr std::string_view prefix = "target.";
    if (key.substr(0, prefix.size()) != prefix)
        return std::nullopt;
    key.remove_prefix(prefix.size());
    auto dot = key.find('.');
    if (dot == std::string_view::npos || dot == 0)
        return std::nullopt;
    int index = 0;
    auto idx = key.substr(0, dot);
    auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), index);
    if (ec != std::errc{} || ptr != idx.data() + idx.size() || index < 0)
        return std::nullopt;
    std::string field(key.substr(dot + 1));
    if (std::find(target_fields.begin(), target_fields.end(), field) == target_fields.end())
        return std::nullopt;
    return std::make_pair(index, field);
}

double as_integer(const std::string &key, double v, double lo, double hi)
{
    require(std::floor(v) == v && v >= lo && v <= hi, key + " must be an integer (got " + num(v) + ")");
    return v;
}

} // namespace

CarrierConfig::CarrierConfig(double frequency_hz) : frequency_hz_(frequency_hz)
{
    require(positive_finite(frequency_hz), "frequency_hz must be > 0 (got " + num(frequency_hz) + ")");
    wavelength_m_ = speed_of_light / frequency_hz_;
    k0_ = 2.0 * pi / wavelength_m_;
}

ScenarioConfig default_scenario()
{
    ScenarioConfig s;
    s.carrier = CarrierConfig(5.5e9);
    s.ris = RisGeometry{{-3.0, 2.7}, 16, 0.016};
    s.radar = RadarNode{{-2.5, 4.3}, 2e-3, 1.0, 1.0};
    s.targets = {
        TargetTrajectory{{-1.0, 2.1}, 0.2, 2.0 * pi, 1.0},
        TargetTrajectory{{-1.0, 3.2}, 0.2, 4.0 * pi, 1.0},
    };
    s.prf_hz = 1000.0;
    s.duration_s = 1.5;
    return s;
}

void validate(const PlaneWave &wave)
{
    if (!(std::abs(wave.incidence_deg) < 90.0))
        throw InvalidArgument("angle out of half-space: incidence " + num(wave.incidence_deg) + " deg");
    if (!positive_finite(wave.amplitude_v_per_m))
        throw InvalidArgument("plane-wave amplitude must be > 0");
}

void validate(const RisGeometry &ris)
{
    require(ris.element_count >= 1, "element_count must be ≥ 1 (got " + std::to_string(ris.element_count) + ")");
    require(positive_finite(ris.spacing_m), "ris.dy_m must be > 0 (got " + num(ris.spacing_m) + ")");
    require(std::isfinite(ris.center.x) && std::isfinite(ris.center.y), "ris center must be finite");
}

double max_predicted_doppler_hz(const ScenarioConfig &scenario)
{
    double fmax = 0.0;
    for (const auto &t : scenario.targets)
        fmax = std::max(fmax, 2.0 * t.radius_m * std::abs(t.omega_rad_s) / scenario.carrier.wavelength_m());
    return fmax;
}

void validate(const ScenarioConfig &s)
{
    require(positive_finite(s.carrier.frequency_hz()),
            "frequency_hz must be > 0 (got " + num(s.carrier.frequency_hz()) + ")");
    validate(s.ris);
    require(std::isfinite(s.radar.position.x) && std::isfinite(s.radar.position.y), "radar position must be finite");
    require(positive_finite(s.radar.tx_power_w), "radar.ptx_w must be > 0 (got " + num(s.radar.tx_power_w) + ")");
    require(positive_finite(s.radar.tx_gain), "radar.gtx must be > 0 (got " + num(s.radar.tx_gain) + ")");
    require(positive_finite(s.radar.rx_gain), "radar.grx must be > 0 (got " + num(s.radar.rx_gain) + ")");
    require(distance(s.radar.position, s.ris.center) > 0.0, "radar must not coincide with the RIS centre");
    require(positive_finite(s.prf_hz), "prf_hz must be > 0 (got " + num(s.prf_hz) + ")");
    require(positive_finite(s.duration_s), "duration_s must be > 0 (got " + num(s.duration_s) + ")");
    require(std::isfinite(s.calibration_offset_db), "calibration_offset_db must be finite");
    if (s.noise)
        require(std::isfinite(s.noise->snr_db), "noise.snr_db must be finite");

    for (std::size_t i = 0; i < s.targets.size(); ++i)
    {
        const auto &t = s.targets[i];
        const std::string name = "target." + std::to_string(i);
        require(std::isfinite(t.center.x) && std::isfinite(t.center.y), name + " centre must be finite");
        require(std::isfinite(t.radius_m) && t.radius_m >= 0.0,
                name + ".radius_m must be ≥ 0 (got " + num(t.radius_m) + ")");
        require(std::isfinite(t.omega_rad_s), name + ".omega_rad_s must be finite");
        require(positive_finite(t.rcs_sqm), name + ".rcs_sqm must be > 0 (got " + num(t.rcs_sqm) + ")");
        // the whole circle must stay in the half-space the RIS scatters into
        require(t.center.x - t.radius_m > s.ris.center.x,
                name + " must stay in front of the RIS (x > " + num(s.ris.center.x) + ")");
    }

    const double fmax = max_predicted_doppler_hz(s);
    require(s.prf_hz > 2.0 * fmax,
            "prf_hz must exceed twice the maximum Doppler " + num(fmax) + " Hz (got " + num(s.prf_hz) + ")");
}

ScenarioConfig parse_scenario(std::string_view text)
{
    std::map<std::string, double> values;
    std::map<int, std::map<std::string, double>> targets;

    std::size_t line_no = 0;
    while (!text.empty())
    {
        ++line_no;
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        auto eq = line.find('=');
        require(eq != std::string_view::npos, "line " + std::to_string(line_no) + ": expected key = value");
        std::string key(trim(line.substr(0, eq)));
        std::string_view raw = trim(line.substr(eq + 1));

        double v = 0.0;
        require(parse_number(raw, v), "line " + std::to_string(line_no) + ": invalid number for " + key);

        if (auto tk = split_target_key(key))
        {
            auto [it, fresh] = targets[tk->first].emplace(tk->second, v);
            require(fresh, "duplicate key " + key);
            continue;
        }
        const bool known = std::find(required_keys.begin(), required_keys.end(), key) != required_keys.end() ||
                           std::find(optional_keys.begin(), optional_keys.end(), key) != optional_keys.end();
        require(known, "unknown key " + key);
        require(values.emplace(key, v).second, "duplicate key " + key);
    }

    for (auto key : required_keys)
        require(values.count(std::string(key)) > 0, "missing " + std::string(key));

    ScenarioConfig s;
    s.carrier = CarrierConfig(values.at("frequency_hz"));
    s.ris.center = {values.at("ris.center_x_m"), values.at("ris.center_y_m")};
    s.ris.element_count = static_cast<int>(
        as_integer("ris.n", values.at("ris.n"), std::numeric_limits<int>::min(), std::numeric_limits<int>::max()));
    s.ris.spacing_m = values.at("ris.dy_m");
    s.radar.position = {values.at("radar.x_m"), values.at("radar.y_m")};
    s.radar.tx_power_w = values.at("radar.ptx_w");
    s.radar.tx_gain = values.at("radar.gtx");
    s.radar.rx_gain = values.at("radar.grx");
    s.prf_hz = values.at("prf_hz");
    s.duration_s = values.at("duration_s");
    if (auto it = values.find("calibration_offset_db"); it != values.end())
        s.calibration_offset_db = it->second;
    if (values.count("noise.snr_db") || values.count("noise.seed"))
    {
        NoiseConfig noise;
        if (auto it = values.find("noise.snr_db"); it != values.end())
            noise.snr_db = it->second;
        else
            throw ConfigError("missing noise.snr_db");
        if (auto it = values.find("noise.seed"); it != values.end())
            noise.seed = static_cast<unsigned long long>(as_integer("noise.seed", it->second, 0.0, 9007199254740992.0));
        s.noise = noise;
    }

    for (const auto &[index, fields] : targets)
    {
        const std::string name = "target." + std::to_string(index) + ".";
        for (auto f : target_fields)
            require(fields.count(std::string(f)) > 0, "missing " + name + std::string(f));
        TargetTrajectory t;
        t.center = {fields.at("center_x_m"), fields.at("center_y_m")};
        t.radius_m = fields.at("radius_m");
        t.omega_rad_s = fields.at("omega_rad_s");
        t.rcs_sqm = fields.at("rcs_sqm");
        s.targets.push_back(t);
    }

    validate(s);
    return s;
}

ScenarioConfig load_scenario(const std::filesystem::path &path)
{
    std::string text;
    try
    {
        text = read_file(path);
    }
    catch (const IoError &e)
    {
        throw ConfigError(e.what());
    }
    return parse_scenario(text);
}

std::string serialize_scenario(const ScenarioConfig &s)
{
    std::ostringstream out;
    auto kv = [&out](std::string_view key, double v) { out << key << " = " << num(v) << '\n'; };
    kv("frequency_hz", s.carrier.frequency_hz());
    kv("ris.center_x_m", s.ris.center.x);
    kv("ris.center_y_m", s.ris.center.y);
    kv("ris.n", s.ris.element_count);
    kv("ris.dy_m", s.ris.spacing_m);
    kv("radar.x_m", s.radar.position.x);
    kv("radar.y_m", s.radar.position.y);
    kv("radar.ptx_w", s.radar.tx_power_w);
    kv("radar.gtx", s.radar.tx_gain);
    kv("radar.grx", s.radar.rx_gain);
    kv("prf_hz", s.prf_hz);
    kv("duration_s", s.duration_s);
    kv("calibration_offset_db", s.calibration_offset_db);
    if (s.noise)
    {
        kv("noise.snr_db", s.noise->snr_db);
        out << "noise.seed = " << s.noise->seed << '\n';
    }
    for (std::size_t i = 0; i < s.targets.size(); ++i)
    {
        const auto &t = s.targets[i];
        const std::string p = "target." + std::to_string(i) + ".";
        kv(p + "center_x_m", t.center.x);
        kv(p + "center_y_m", t.center.y);
        kv(p + "radius_m", t.radius_m);
        kv(p + "omega_rad_s", t.omega_rad_s);
        kv(p + "rcs_sqm", t.rcs_sqm);
    }
    return out.str();
}

Vector3 wave_vector(double angle_deg, double k0, WaveDirection direction)
{
    if (!(std::abs(angle_deg) < 90.0))
        throw InvalidArgument("angle out of half-space: " + num(angle_deg) + " deg");
    const double a = deg_to_rad(angle_deg);
    const double sign = direction == WaveDirection::Incident ? -1.0 : 1.0;
    return {sign * k0 * std::cos(a), sign * k0 * std::sin(a), 0.0};
}

std::vector<Point2> element_positions(const RisGeometry &ris)
{
    validate(ris);
    const int n = ris.element_count;
    std::vector<Point2> out;
    out.reserve(n);
    const double mid = 0.5 * (n - 1);
    for (int i = 0; i < n; ++i)
        out.push_back({ris.center.x, ris.center.y + (i - mid) * ris.spacing_m});
    return out;
}

} // namespace rislab
