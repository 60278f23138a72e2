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

#include "cli.hpp"

#include "rislab/analysis.hpp"
#include "rislab/csv.hpp"
#include "rislab/dynamics.hpp"
#include "rislab/emfield.hpp"
#include "rislab/error.hpp"
#include "rislab/phasing.hpp"
#include "rislab/scene.hpp"
#include "rislab/specgram.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <array>
#include <cstdlib>
#include <sstream>

namespace rislab::cli
{

namespace
{

namespace fs = std::filesystem;

constexpr const char *exit_code_help = "Exit codes:\n"
                                       "  0  success\n"
                                       "  1  internal error\n"
                                       "  2  usage error (unknown flag or subcommand, bad flag value)\n"
                                       "  3  invalid or unreadable configuration\n"
                                       "  4  I/O failure while writing outputs\n"
                                       "  5  computation rejected its inputs (e.g. angle out of range)\n"
                                       "\n"
                                       "Output directory: --out, else $RIS_LAB_OUT, else ./ris_lab_out";

constexpr const char *default_out_dir = "ris_lab_out";

struct SteeringArgs
{
    std::string mode = "dual";
    double phi_i = 0.0;
    double phi_d = 0.0;
};

void add_steering(CLI::App *cmd, SteeringArgs &a, const std::string &default_mode)
{
    a.mode = default_mode;
    cmd->add_option("--mode", a.mode, "RIS configuration")
        ->check(CLI::IsMember({"metal", "one", "dual"}))
        ->capture_default_str();
    cmd->add_option("--phi-i", a.phi_i, "Incidence angle from the RIS normal, degrees")->capture_default_str();
    cmd->add_option("--phi-d", a.phi_d, "Desired steering angle, degrees")->capture_default_str();
}

class Session
{
  public:
    Session(std::string subcommand, fs::path dir, const ScenarioConfig &scenario) : dir_(std::move(dir))
    {
        manifest_.subcommand = std::move(subcommand);
        manifest_.config_snapshot = serialize_scenario(scenario);
    }

    void arg(const std::string &key, const std::string &value) { manifest_.arguments.emplace_back(key, value); }
    void arg(const std::string &key, double value) { arg(key, format_exact_number(value)); }

    void emit(const std::string &name, const std::string &content)
    {
        write_file_atomic(dir_ / name, content);
        manifest_.outputs.push_back({name, sha256_hex(content)});
    }

    void finish() { write_manifest(manifest_, dir_); }

  private:
    fs::path dir_;
    RunManifest manifest_;
};

template <typename Writer>
std::string render(Writer &&writer)
{
    std::ostringstream ss;
    writer(ss);
    return ss.str();
}

void run_pattern(Session &s, const ScenarioConfig &sc, const SteeringArgs &a, double step, double floor_db, double rho,
                 std::ostream &out)
{
    const ProfileMode mode = parse_profile_mode(a.mode);
    const SteeringCommand cmd{a.phi_i, a.phi_d};
    const double k0 = sc.carrier.k0();
    const auto &ris = sc.ris;

    const PhaseProfile profile = synthesize_profile(mode, cmd, k0, ris.spacing_m, ris.element_count);
    const PhaseProfile ideal =
        mode == ProfileMode::Metal ? profile : snell_profile(cmd, k0, ris.spacing_m, ris.element_count);
    const auto pattern = pattern_scan(profile, PlaneWave{a.phi_i, 1.0}, rho, ris, k0, step);
    const auto lobes = find_lobes(pattern, floor_db);

    s.emit("pattern.csv", render([&](std::ostream &o) { write_pattern_csv(o, pattern); }));
    s.emit("lobes.csv", render([&](std::ostream &o) { write_lobes_csv(o, lobes); }));
    s.emit("profile.csv", render([&](std::ostream &o) { write_profile_csv(o, ideal, quantize_one_bit(ideal)); }));

    out << "lobes (" << to_string(mode) << ", phi_i " << format_csv_number(a.phi_i) << ", phi_d "
        << format_csv_number(a.phi_d) << "):\n";
    for (const auto &l : lobes)
        out << "  #" << l.rank << "  " << format_csv_number(l.angle_deg) << " deg  " << format_csv_number(l.power_db)
            << " dB\n";
}

void run_sweep(Session &s, const ScenarioConfig &sc, const SteeringArgs &a, double cmd_step, double step,
               std::size_t max_lobes, std::ostream &out)
{
    const ProfileMode mode = parse_profile_mode(a.mode);
    const auto grid = uniform_angle_grid(cmd_step);
    const auto rows = steering_sweep(mode, a.phi_i, grid, sc, SweepOptions{step, default_lobe_floor_db, max_lobes});
    s.emit("sweep.csv", render([&](std::ostream &o) { write_sweep_csv(o, rows); }));
    out << "sweep: " << rows.size() << " commanded angles, mode " << to_string(mode) << ", phi_i "
        << format_csv_number(a.phi_i) << '\n';
}

bool parse_case(const std::string &text, double &phi_i, double &phi_d)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        return false;
    return parse_number(std::string_view(text).substr(0, colon), phi_i) &&
           parse_number(std::string_view(text).substr(colon + 1), phi_d);
}

void run_rcs_table(Session &s, const ScenarioConfig &sc, const std::vector<RcsCase> &cases, std::ostream &out)
{
    const auto table = rcs_table(sc, cases);
    s.emit("rcs_table.csv", render([&](std::ostream &o) { write_rcs_table_csv(o, table); }));
    out << "mode   phi_i  phi_d   sigma_f_db   sigma_r_db\n";
    for (const auto &e : table)
        out << to_string(e.mode) << "  " << format_csv_number(e.incidence_deg) << "  "
            << format_csv_number(e.desired_deg) << "  " << format_csv_number(e.sigma_f_db) << "  "
            << format_csv_number(e.sigma_r_db) << '\n';
}

void run_spectrogram(Session &s, const ScenarioConfig &sc, const SteeringArgs &a, const WindowSpec &window,
                     std::ostream &out)
{
    const ProfileMode mode = parse_profile_mode(a.mode);
    const auto signal = synthesize_slow_time(sc, mode, {a.phi_i, a.phi_d});
    const auto spec = stft(signal, window);
    s.emit("slow_time.csv", render([&](std::ostream &o) { write_slow_time_csv(o, signal); }));
    s.emit("spectrogram.csv", spectrogram_csv(spec));
    out << "spectrogram: " << spec.frames() << " frames x " << spec.bins() << " bins ("
        << format_csv_number(signal.prf_hz / static_cast<double>(spec.bins())) << " Hz resolution)\n";
}

void run_squint(Session &s, const ScenarioConfig &sc, const SteeringArgs &a, double step, std::ostream &out)
{
    const ProfileMode mode = parse_profile_mode(a.mode);
    const SteeringCommand cmd{a.phi_i, a.phi_d};
    const double k0 = sc.carrier.k0();
    const auto profile = synthesize_profile(mode, cmd, k0, sc.ris.spacing_m, sc.ris.element_count);
    const auto lobes =
        find_lobes(pattern_scan(profile, PlaneWave{a.phi_i, 1.0}, rcs_reference_distance_m, sc.ris, k0, step));

    std::vector<double> targets{a.phi_d};
    if (mode == ProfileMode::DualBeamOneBit && a.phi_d != 0.0)
        targets.push_back(-a.phi_d);

    std::ostringstream csv;
    csv << "phi_d_deg,lobe_angle_deg,squint_error_deg\n";
    for (double phi : targets)
    {
        const double err = squint_error(lobes, phi);
        double nearest = lobes.front().angle_deg;
        for (const auto &l : lobes)
            if (std::abs(l.angle_deg - phi) < std::abs(nearest - phi))
                nearest = l.angle_deg;
        csv << format_csv_number(phi) << ',' << format_csv_number(nearest) << ',' << format_csv_number(err) << '\n';
        out << "phi_d " << format_csv_number(phi) << " deg -> lobe at " << format_csv_number(nearest)
            << " deg, squint error " << format_csv_number(err) << " deg\n";
    }
    s.emit("squint.csv", csv.str());
}

fs::path resolve_out_dir(const std::string &flag)
{
    if (!flag.empty())
        return flag;
    if (const char *env = std::getenv("RIS_LAB_OUT"); env != nullptr && *env != '\0')
        return env;
    return default_out_dir;
}

} // namespace

std::string sha256_hex(std::string_view data)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string s;
    s.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i)
    {
        s.push_back(hex[md[i] >> 4]);
        s.push_back(hex[md[i] & 0x0f]);
    }
    return s;
}

void write_manifest(const RunManifest &manifest, const fs::path &dir)
{
    nlohmann::ordered_json j;
    j["subcommand"] = manifest.subcommand;
    j["arguments"] = nlohmann::ordered_json::object();
    for (const auto &[k, v] : manifest.arguments)
        j["arguments"][k] = v;
    j["config"] = manifest.config_snapshot;
    j["outputs"] = nlohmann::ordered_json::array();
    for (const auto &f : manifest.outputs)
    {
        if (!fs::exists(dir / f.name))
            throw IoError("manifest lists missing output " + (dir / f.name).string());
        j["outputs"].push_back({{"file", f.name}, {"sha256", f.sha256}});
    }
    write_file_atomic(dir / "manifest.json", j.dump(2) + "\n");
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Simulates RIS-assisted radar scattering: phase profiles, far-field patterns, RCS tables and "
                 "micro-Doppler spectrograms.",
                 "ris-lab"};
    app.footer(exit_code_help);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_flag;
    app.add_option("--config", config_path, "Scenario file (key = value); built-in scenario when omitted");
    app.add_option("--out", out_flag, "Output directory (overrides $RIS_LAB_OUT)");

    SteeringArgs pattern_args, sweep_args, spec_args, squint_args;
    double pattern_step = default_grid_step_deg, pattern_floor = default_lobe_floor_db, pattern_rho = 1.0;
    double sweep_cmd_step = 2.0, sweep_step = default_grid_step_deg;
    std::size_t sweep_max_lobes = 4;
    std::vector<std::string> case_specs;
    WindowSpec window;
    std::string window_shape = "hann";
    double squint_step = default_grid_step_deg;

    auto *pattern = app.add_subcommand("pattern", "Far-field pattern, lobe list and phase profile");
    add_steering(pattern, pattern_args, "dual");
    pattern->add_option("--step", pattern_step, "Observation grid step, degrees")->capture_default_str();
    pattern->add_option("--floor-db", pattern_floor, "Lobe detection floor relative to the peak")
        ->capture_default_str();
    pattern->add_option("--rho", pattern_rho, "Reference distance, metres")->capture_default_str();

    auto *sweep = app.add_subcommand("sweep", "Main-lobe positions while the command sweeps -90..90 deg");
    add_steering(sweep, sweep_args, "dual");
    sweep->remove_option(sweep->get_option("--phi-d"));
    sweep->add_option("--cmd-step", sweep_cmd_step, "Commanded-angle step, degrees")->capture_default_str();
    sweep->add_option("--step", sweep_step, "Observation grid step, degrees")->capture_default_str();
    sweep->add_option("--max-lobes", sweep_max_lobes, "Lobes kept per commanded angle")->capture_default_str();

    auto *rcs = app.add_subcommand("rcs-table", "Forward/reverse RCS for metal, one-beam and dual-beam");
    rcs->add_option("--case", case_specs, "Angle pair phi_i:phi_d (repeatable); default -30:30 0:30 0:45");

    auto *spec = app.add_subcommand("spectrogram", "Slow-time return of the scenario targets and its STFT");
    spec_args.phi_i = -45.0;
    spec_args.phi_d = 30.0;
    add_steering(spec, spec_args, "dual");
    spec->add_option("--window-s", window.duration_s, "STFT window duration, seconds")->capture_default_str();
    spec->add_option("--hop-s", window.hop_s, "STFT hop, seconds")->capture_default_str();
    spec->add_option("--window", window_shape, "Window shape")
        ->check(CLI::IsMember({"hann", "rect"}))
        ->capture_default_str();

    auto *squint = app.add_subcommand("squint", "Beam-squint error of the realised lobes");
    squint_args.phi_d = 45.0;
    add_steering(squint, squint_args, "dual");
    squint->add_option("--step", squint_step, "Observation grid step, degrees")->capture_default_str();

    for (auto *sub : {pattern, sweep, rcs, spec, squint})
        sub->fallthrough();

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args)
        argv.push_back(a.c_str());

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError &e)
    {
        err << "ris-lab: " << e.what() << '\n';
        return exit_usage;
    }

    std::vector<RcsCase> cases;
    if (rcs->parsed())
    {
        if (case_specs.empty())
        {
            cases = reference_rcs_cases();
        }
        for (const auto &c : case_specs)
        {
            double phi_i = 0.0, phi_d = 0.0;
            if (!parse_case(c, phi_i, phi_d))
            {
                err << "ris-lab: --case expects phi_i:phi_d, got '" << c << "'\n";
                return exit_usage;
            }
            for (auto mode : {ProfileMode::Metal, ProfileMode::OneBeam, ProfileMode::DualBeamOneBit})
                cases.push_back({mode, phi_i, phi_d});
        }
    }

    try
    {
        const ScenarioConfig scenario = config_path.empty() ? default_scenario() : load_scenario(config_path);
        const fs::path dir = resolve_out_dir(out_flag);
        const std::string name = app.get_subcommands().front()->get_name();
        Session session(name, dir, scenario);

        auto record_steering = [&session](const SteeringArgs &a, bool with_phi_d = true) {
            session.arg("mode", a.mode);
            session.arg("phi_i_deg", a.phi_i);
            if (with_phi_d)
                session.arg("phi_d_deg", a.phi_d);
        };

        if (pattern->parsed())
        {
            record_steering(pattern_args);
            session.arg("grid_step_deg", pattern_step);
            session.arg("floor_db", pattern_floor);
            session.arg("rho_m", pattern_rho);
            run_pattern(session, scenario, pattern_args, pattern_step, pattern_floor, pattern_rho, out);
        }
        else if (sweep->parsed())
        {
            record_steering(sweep_args, false);
            session.arg("cmd_step_deg", sweep_cmd_step);
            session.arg("grid_step_deg", sweep_step);
            session.arg("max_lobes", std::to_string(sweep_max_lobes));
            run_sweep(session, scenario, sweep_args, sweep_cmd_step, sweep_step, sweep_max_lobes, out);
        }
        else if (rcs->parsed())
        {
            std::string list;
            for (const auto &c : cases)
                if (c.mode == ProfileMode::Metal)
                    list += (list.empty() ? "" : " ") + format_exact_number(c.incidence_deg) + ":" +
                            format_exact_number(c.desired_deg);
            session.arg("cases", list);
            run_rcs_table(session, scenario, cases, out);
        }
        else if (spec->parsed())
        {
            window.shape = window_shape == "rect" ? WindowShape::Rect : WindowShape::Hann;
            record_steering(spec_args);
            session.arg("window_s", window.duration_s);
            session.arg("hop_s", window.hop_s);
            session.arg("window", window_shape);
            run_spectrogram(session, scenario, spec_args, window, out);
        }
        else if (squint->parsed())
        {
            record_steering(squint_args);
            session.arg("grid_step_deg", squint_step);
            run_squint(session, scenario, squint_args, squint_step, out);
        }
        session.finish();
    }
    catch (const ConfigError &e)
    {
        err << "ris-lab: " << e.what() << '\n';
        return exit_config;
    }
    catch (const IoError &e)
    {
        err << "ris-lab: " << e.what() << '\n';
        return exit_io;
    }
    catch (const fs::filesystem_error &e)
    {
        err << "ris-lab: " << e.what() << '\n';
        return exit_io;
    }
    catch (const Error &e)
    {
        err << "ris-lab: " << e.what() << '\n';
        return exit_compute;
    }
    catch (const std::exception &e)
    {
        err << "ris-lab: internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_ok;
}

} // namespace rislab::cli
