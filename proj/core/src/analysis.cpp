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

#include "rislab/analysis.hpp"

#include "rislab/csv.hpp"
#include "rislab/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rislab
{

namespace
{

struct Vertex
{
    double x;
    double y;
};

// Vertex of the parabola through three points with x0 < x1 < x2 and y1 the
// strict maximum, clamped to [x0, x2].
Vertex parabola_vertex(double x0, double y0, double x1, double y1, double x2, double y2)
{
    const double d01 = x0 - x1;
    const double d02 = x0 - x2;
    const double d12 = x1 - x2;
    const double a = (y0 / (d01 * d02)) - (y1 / (d01 * d12)) + (y2 / (d02 * d12));
    const double b = -y0 * (x1 + x2) / (d01 * d02) + y1 * (x0 + x2) / (d01 * d12) - y2 * (x0 + x1) / (d02 * d12);
    if (!(a < 0.0))
        return {x1, y1};
    const double xv = std::clamp(-b / (2.0 * a), x0, x2);
    // evaluate in Lagrange form
    const double l0 = (xv - x1) * (xv - x2) / (d01 * d02);
    const double l1 = (xv - x0) * (xv - x2) / (-d01 * d12);
    const double l2 = (xv - x0) * (xv - x1) / (d02 * d12);
    return {xv, y0 * l0 + y1 * l1 + y2 * l2};
}

bool lobe_order(const Lobe &a, const Lobe &b)
{
    if (a.power_db != b.power_db)
        return a.power_db > b.power_db;
    if (std::abs(a.angle_deg) != std::abs(b.angle_deg))
        return std::abs(a.angle_deg) < std::abs(b.angle_deg);
    return a.angle_deg < b.angle_deg;
}

} // namespace

std::vector<Lobe> find_lobes(const FarFieldPattern &pattern, double floor_db)
{
    if (pattern.size() == 0 || pattern.field.size() != pattern.size())
        throw InvalidArgument("find_lobes: empty pattern");
    if (!(floor_db < 0.0))
        throw InvalidArgument("find_lobes: floor must be negative");

    const std::size_t n = pattern.size();
    std::vector<double> mag(n);
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        mag[i] = std::abs(pattern.field[i]);
        peak = std::max(peak, mag[i]);
    }

    auto sample_db = [&](std::size_t i) { return peak > 0.0 ? magnitude_db(mag[i], peak) : 0.0; };

    std::vector<Lobe> lobes;
    for (std::size_t first = 0; first < n;)
    {
        std::size_t last = first;
        while (last + 1 < n && mag[last + 1] == mag[first])
            ++last;

        const bool left_lower = first == 0 || mag[first - 1] < mag[first];
        const bool right_lower = last + 1 == n || mag[last + 1] < mag[first];
        const double db = sample_db(first);

        if (left_lower && right_lower && db >= floor_db)
        {
            if (first == last && first > 0 && last + 1 < n)
            {
                const std::size_t i = first;
                const double x0 = std::sin(deg_to_rad(pattern.angles_deg[i - 1]));
                const double x1 = std::sin(deg_to_rad(pattern.angles_deg[i]));
                const double x2 = std::sin(deg_to_rad(pattern.angles_deg[i + 1]));
                const Vertex v = parabola_vertex(x0, sample_db(i - 1), x1, db, x2, sample_db(i + 1));
                lobes.push_back({rad_to_deg(std::asin(std::clamp(v.x, -1.0, 1.0))), v.y, 0});
            }
            else
            {
                std::size_t best = first;
                for (std::size_t i = first + 1; i <= last; ++i)
                    if (std::abs(pattern.angles_deg[i]) < std::abs(pattern.angles_deg[best]))
                        best = i;
                lobes.push_back({pattern.angles_deg[best], db, 0});
            }
        }
        first = last + 1;
    }

    if (lobes.empty())
        return lobes;

    double strongest = -std::numeric_limits<double>::infinity();
    for (const auto &l : lobes)
        strongest = std::max(strongest, l.power_db);
    for (auto &l : lobes)
        l.power_db = std::min(l.power_db - strongest, 0.0);

    std::sort(lobes.begin(), lobes.end(), lobe_order);
    for (std::size_t r = 0; r < lobes.size(); ++r)
        lobes[r].rank = static_cast<int>(r);
    return lobes;
}

double squint_error(std::span<const Lobe> lobes, double desired_deg)
{
    if (lobes.empty())
        throw InvalidArgument("squint_error: no lobes");
    double best = std::numeric_limits<double>::infinity();
    for (const auto &l : lobes)
        best = std::min(best, std::abs(l.angle_deg - desired_deg));
    return best;
}

double rcs_linear(Complex scattered, const PlaneWave &wave, double rho_m)
{
    if (!(wave.amplitude_v_per_m != 0.0))
        throw InvalidArgument("rcs: zero incident amplitude");
    if (!(rho_m > 0.0))
        throw InvalidArgument("nonpositive reference distance");
    const double e0 = wave.amplitude_v_per_m;
    return 2.0 * pi * rho_m * std::norm(scattered) / (e0 * e0);
}

double rcs_db(Complex scattered, const PlaneWave &wave, double rho_m, double calibration_offset_db)
{
    const double sigma = rcs_linear(scattered, wave, rho_m);
    const double db = sigma > 0.0 ? std::max(10.0 * std::log10(sigma), db_floor_sentinel) : db_floor_sentinel;
    return db + calibration_offset_db;
}

RcsEntry reciprocity_report(ProfileMode mode, const SteeringCommand &cmd, const ScenarioConfig &scenario)
{
    validate(cmd);
    if (!(std::abs(cmd.desired_deg) < 90.0))
        throw InvalidArgument("angle out of half-space: reverse-path incidence " + format_csv_number(cmd.desired_deg) +
                              " deg");

    const double k0 = scenario.carrier.k0();
    const auto &ris = scenario.ris;
    const PhaseProfile profile = synthesize_profile(mode, cmd, k0, ris.spacing_m, ris.element_count);
    const double rho = rcs_reference_distance_m;

    const PlaneWave forward{cmd.incidence_deg, 1.0};
    const PlaneWave reverse{cmd.desired_deg, 1.0};
    const Complex ef = scattered_field(profile, forward, cmd.desired_deg, rho, ris, k0);
    const Complex er = scattered_field(profile, reverse, cmd.incidence_deg, rho, ris, k0);

    return RcsEntry{mode, cmd.incidence_deg, cmd.desired_deg,
                    rcs_db(ef, forward, rho, scenario.calibration_offset_db),
                    rcs_db(er, reverse, rho, scenario.calibration_offset_db)};
}

std::vector<RcsCase> reference_rcs_cases()
{
    std::vector<RcsCase> cases;
    const std::pair<double, double> angles[] = {{-30.0, 30.0}, {0.0, 30.0}, {0.0, 45.0}};
    for (auto [phi_i, phi_d] : angles)
        for (auto mode : {ProfileMode::Metal, ProfileMode::OneBeam, ProfileMode::DualBeamOneBit})
            cases.push_back({mode, phi_i, phi_d});
    return cases;
}

std::vector<RcsEntry> rcs_table(const ScenarioConfig &scenario, std::span<const RcsCase> cases)
{
    std::vector<RcsEntry> table;
    table.reserve(cases.size());
    for (const auto &c : cases)
        table.push_back(reciprocity_report(c.mode, {c.incidence_deg, c.desired_deg}, scenario));
    return table;
}

std::vector<SweepRow> steering_sweep(ProfileMode mode, double incidence_deg, std::span<const double> desired_grid_deg,
                                     const ScenarioConfig &scenario, const SweepOptions &options)
{
    const double k0 = scenario.carrier.k0();
    const auto &ris = scenario.ris;
    const PlaneWave wave{incidence_deg, 1.0};
    validate(wave);

    std::vector<SweepRow> rows;
    rows.reserve(desired_grid_deg.size());

    std::vector<Lobe> metal_lobes;
    if (mode == ProfileMode::Metal)
        metal_lobes = find_lobes(pattern_scan(metal_profile(ris.element_count), wave, rcs_reference_distance_m, ris, k0,
                                              options.grid_step_deg),
                                 options.floor_db);

    for (double phi_d : desired_grid_deg)
    {
        const SteeringCommand cmd{incidence_deg, phi_d};
        validate(cmd);
        std::vector<Lobe> lobes;
        if (mode == ProfileMode::Metal)
        {
            lobes = metal_lobes;
        }
        else
        {
            const auto profile = synthesize_profile(mode, cmd, k0, ris.spacing_m, ris.element_count);
            lobes = find_lobes(pattern_scan(profile, wave, rcs_reference_distance_m, ris, k0, options.grid_step_deg),
                               options.floor_db);
        }
        if (lobes.size() > options.max_lobes)
            lobes.resize(options.max_lobes);
        rows.push_back({phi_d, std::move(lobes)});
    }
    return rows;
}

std::vector<double> uniform_angle_grid(double step_deg)
{
    if (!(step_deg > 0.0 && step_deg <= 180.0))
        throw InvalidArgument("angle grid step must satisfy 0 < step <= 180");
    const double steps = 180.0 / step_deg;
    const long long n = std::llround(steps);
    if (std::abs(steps - static_cast<double>(n)) > 1e-9 * steps)
        throw InvalidArgument("angle grid step must divide 180 deg evenly");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n + 1));
    for (long long i = 0; i <= n; ++i)
        grid.push_back(-90.0 + 180.0 * static_cast<double>(i) / static_cast<double>(n));
    return grid;
}

void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows)
{
    out << "phi_d_cmd_deg,rank,lobe_angle_deg,lobe_power_db\n";
    for (const auto &row : rows)
        for (const auto &l : row.lobes)
            out << format_csv_number(row.desired_deg) << ',' << l.rank << ',' << format_csv_number(l.angle_deg) << ','
                << format_csv_number(l.power_db) << '\n';
}

void write_rcs_table_csv(std::ostream &out, std::span<const RcsEntry> table)
{
    out << "mode,phi_i_deg,phi_d_deg,sigma_f_db,sigma_r_db\n";
    for (const auto &e : table)
        out << to_string(e.mode) << ',' << format_csv_number(e.incidence_deg) << ','
            << format_csv_number(e.desired_deg) << ',' << format_csv_number(e.sigma_f_db) << ','
            << format_csv_number(e.sigma_r_db) << '\n';
}

void write_lobes_csv(std::ostream &out, std::span<const Lobe> lobes)
{
    out << "rank,lobe_angle_deg,lobe_power_db\n";
    for (const auto &l : lobes)
        out << l.rank << ',' << format_csv_number(l.angle_deg) << ',' << format_csv_number(l.power_db) << '\n';
}

} // namespace rislab
