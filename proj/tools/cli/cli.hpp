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

#ifndef RISLAB_TOOLS_CLI_HPP
#define RISLAB_TOOLS_CLI_HPP

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace rislab::cli
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_internal = 1,
    exit_usage = 2,
    exit_config = 3,
    exit_io = 4,
    exit_compute = 5,
};

struct OutputFile
{
    std::string name;   // relative to the output directory
    std::string sha256; // hex digest of the file contents
};

// What a successful run produced; serialised to manifest.json.
struct RunManifest
{
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> arguments; // resolved, in declaration order
    std::string config_snapshot;                                 // serialised scenario
    std::vector<OutputFile> outputs;
};

std::string sha256_hex(std::string_view data);

// Writes <dir>/manifest.json; every listed output must already exist.
void write_manifest(const RunManifest &manifest, const std::filesystem::path &dir);

// Entry point shared by the executable and the tests. args[0] is the program
// name. Returns one of ExitCode.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace rislab::cli

#endif
