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

#include <catch_amalgamated.hpp>

#include <rislab/error.hpp>
#include <rislab/scene.hpp>

#include <cmath>
#include <string>

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

std::string default_text()
{
    return rislab::serialize_scenario(rislab::default_scenario());
}

std::string drop_line(std::string text, const std::string &key)
{
    auto pos = text.find(key + " =");
    REQUIRE(pos != std::string::npos);
    auto eol = text.find('\n', pos);
    text.erase(pos, eol - pos + 1);
    return text;
}

} // namespace

TEST_CASE("carrier wavenumber and wavelength at 5.5 GHz", "[scene]")
{
    const rislab::CarrierConfig c(5.5e9);
    CHECK_THAT(c.k0(), WithinRel(115.2714762073425, 1e-13));
    CHECK_THAT(c.wavelength_m(), WithinRel(0.054507719636363636, 1e-13));
    CHECK_THAT(c.k0() * c.wavelength_m(), WithinRel(2.0 * std::numbers::pi, 1e-15));
}

TEST_CASE("carrier rejects nonpositive frequency", "[scene]")
{
    CHECK_THROWS_AS(rislab::CarrierConfig(0.0), rislab::ConfigError);
    CHECK_THROWS_AS(rislab::CarrierConfig(-1.0), rislab::ConfigError);
    CHECK_THROWS_AS(rislab::CarrierConfig(std::nan("")), rislab::ConfigError);
}

TEST_CASE("zero-element RIS is rejected with the element count in the message", "[scene]")
{
    rislab::RisGeometry ris{{0.0, 0.0}, 0, 0.016};
    CHECK_THROWS_WITH(rislab::validate(ris), "config error: element_count must be ≥ 1 (got 0)");
    ris.element_count = 1;
    CHECK_NOTHROW(rislab::validate(ris));
}

TEST_CASE("plane waves outside the front half-space are rejected", "[scene]")
{
    CHECK_NOTHROW(rislab::validate(rislab::PlaneWave{89.9, 1.0}));
    CHECK_THROWS_WITH(rislab::validate(rislab::PlaneWave{90.0, 1.0}), ContainsSubstring("angle out of half-space"));
    CHECK_THROWS_WITH(rislab::validate(rislab::PlaneWave{-95.0, 1.0}), ContainsSubstring("angle out of half-space"));
    CHECK_THROWS_AS(rislab::validate(rislab::PlaneWave{0.0, 0.0}), rislab::InvalidArgument);
}

TEST_CASE("default scenario is valid and matches its documented values", "[scene]")
{
    const auto s = rislab::default_scenario();
    CHECK_NOTHROW(rislab::validate(s));
    CHECK(s.ris.element_count == 16);
    CHECK(s.ris.spacing_m == 0.016);
    CHECK(s.ris.center == rislab::Point2{-3.0, 2.7});
    CHECK(s.radar.position == rislab::Point2{-2.5, 4.3});
    CHECK(s.radar.tx_power_w == 2e-3);
    REQUIRE(s.targets.size() == 2);
    CHECK(s.targets[0].center == rislab::Point2{-1.0, 2.1});
    CHECK(s.targets[1].center == rislab::Point2{-1.0, 3.2});
    CHECK(s.prf_hz == 1000.0);
    CHECK(s.duration_s == 1.5);
    CHECK_FALSE(s.noise.has_value());
}

TEST_CASE("maximum Doppler of the default targets", "[scene]")
{
    CHECK_THAT(rislab::max_predicted_doppler_hz(rislab::default_scenario()), WithinRel(92.2171809659, 1e-9));
}

TEST_CASE("scenario text round-trips exactly", "[scene]")
{
    auto s = rislab::default_scenario();
    s.noise = rislab::NoiseConfig{17.25, 42};
    s.calibration_offset_db = -1.5;
    s.targets[0].omega_rad_s = 0.1 + 0.2; // not representable in a short decimal
    const auto text = rislab::serialize_scenario(s);
    const auto back = rislab::parse_scenario(text);
    CHECK(rislab::serialize_scenario(back) == text);
    CHECK(back.targets[0].omega_rad_s == s.targets[0].omega_rad_s);
    REQUIRE(back.noise.has_value());
    CHECK(back.noise->seed == 42);
    CHECK(back.noise->snr_db == 17.25);
    CHECK(back.calibration_offset_db == -1.5);
}

TEST_CASE("shipped config equals the built-in default", "[scene]")
{
    const auto loaded = rislab::load_scenario(RISLAB_DEFAULT_CONFIG);
    CHECK(rislab::serialize_scenario(loaded) == default_text());
}

TEST_CASE("parser reports missing, unknown, duplicate and malformed keys", "[scene]")
{
    const auto text = default_text();
    CHECK_THROWS_WITH(rislab::parse_scenario(drop_line(text, "prf_hz")), ContainsSubstring("missing prf_hz"));
    CHECK_THROWS_WITH(rislab::parse_scenario(text + "bogus = 1\n"), ContainsSubstring("unknown key bogus"));
    CHECK_THROWS_WITH(rislab::parse_scenario(text + "prf_hz = 2000\n"), ContainsSubstring("duplicate key prf_hz"));
    CHECK_THROWS_WITH(rislab::parse_scenario(text + "ris.n\n"), ContainsSubstring("expected key = value"));
    CHECK_THROWS_WITH(rislab::parse_scenario(drop_line(text, "ris.dy_m") + "ris.dy_m = 1.6cm\n"),
                      ContainsSubstring("invalid number for ris.dy_m"));
    CHECK_THROWS_WITH(rislab::parse_scenario(drop_line(text, "target.1.rcs_sqm")),
                      ContainsSubstring("missing target.1.rcs_sqm"));
    CHECK_THROWS_AS(rislab::parse_scenario(drop_line(text, "ris.n") + "ris.n = 0\n"), rislab::ConfigError);
    CHECK_THROWS_AS(rislab::parse_scenario(drop_line(text, "ris.n") + "ris.n = 2.5\n"), rislab::ConfigError);
}

TEST_CASE("parser accepts comments, blank lines and surrounding whitespace", "[scene]")
{
    const auto text = "# header\n\n  " + drop_line(default_text(), "prf_hz") + "\tprf_hz =  +1000  # kHz? no, Hz\n";
    CHECK(rislab::parse_scenario(text).prf_hz == 1000.0);
}

TEST_CASE("scenario checks that tie several fields together", "[scene]")
{
    auto s = rislab::default_scenario();
    s.prf_hz = 150.0; // below twice 92.2 Hz
    CHECK_THROWS_WITH(rislab::validate(s), ContainsSubstring("twice the maximum Doppler"));

    s = rislab::default_scenario();
    s.targets[0].center = {-3.1, 2.1};
    CHECK_THROWS_WITH(rislab::validate(s), ContainsSubstring("in front of the RIS"));

    s = rislab::default_scenario();
    s.radar.position = s.ris.center;
    CHECK_THROWS_AS(rislab::validate(s), rislab::ConfigError);
}

TEST_CASE("missing config file is a config error", "[scene]")
{
    CHECK_THROWS_AS(rislab::load_scenario("/nonexistent/ris.cfg"), rislab::ConfigError);
}

TEST_CASE("wave vectors", "[scene]")
{
    const double k = 115.2656;
    const auto ki = rislab::wave_vector(30.0, k, rislab::WaveDirection::Incident);
    CHECK_THAT(ki[0], WithinAbs(-99.8229377825, 1e-9));
    CHECK_THAT(ki[1], WithinAbs(-57.6328, 1e-9));
    CHECK(ki[2] == 0.0);

    const auto ks = rislab::wave_vector(30.0, k, rislab::WaveDirection::Scattered);
    CHECK_THAT(ks[0], WithinAbs(99.8229377825, 1e-9));
    CHECK_THAT(ks[1], WithinAbs(57.6328, 1e-9));

    for (double a = -89.0; a <= 89.0; a += 7.0)
    {
        const auto v = rislab::wave_vector(a, k, rislab::WaveDirection::Incident);
        CHECK_THAT(std::hypot(v[0], v[1], v[2]), WithinRel(k, 1e-14));
    }
    CHECK_THROWS_WITH(rislab::wave_vector(90.0, k, rislab::WaveDirection::Incident),
                      ContainsSubstring("angle out of half-space"));
}

TEST_CASE("element positions", "[scene]")
{
    SECTION("single element sits on the centre")
    {
        const auto p = rislab::element_positions({{-3.0, 2.7}, 1, 0.016});
        REQUIRE(p.size() == 1);
        CHECK(p[0] == rislab::Point2{-3.0, 2.7});
    }
    SECTION("two elements straddle the centre")
    {
        const auto p = rislab::element_positions({{0.0, 0.0}, 2, 0.5});
        REQUIRE(p.size() == 2);
        CHECK(p[0] == rislab::Point2{0.0, -0.25});
        CHECK(p[1] == rislab::Point2{0.0, 0.25});
    }
    SECTION("sixteen elements span fifteen spacings along y")
    {
        const auto p = rislab::element_positions({{-3.0, 2.7}, 16, 0.016});
        REQUIRE(p.size() == 16);
        CHECK_THAT(p.back().y - p.front().y, WithinAbs(0.24, 1e-12));
        double mean = 0.0;
        for (const auto &q : p)
        {
            CHECK(q.x == -3.0);
            mean += q.y;
        }
        CHECK_THAT(mean / 16.0, WithinAbs(2.7, 1e-12));
    }
    SECTION("translating the centre translates every element")
    {
        // dyadic values keep every sum exact
        const rislab::RisGeometry a{{0.0, 0.0}, 8, 0.125};
        const rislab::RisGeometry b{{1.5, -2.25}, 8, 0.125};
        const auto pa = rislab::element_positions(a);
        const auto pb = rislab::element_positions(b);
        for (std::size_t i = 0; i < pa.size(); ++i)
            CHECK(pb[i] == pa[i] + rislab::Point2{1.5, -2.25});
    }
}
