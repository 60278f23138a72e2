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

// Locale-independent number formatting and small file helpers shared by every
// artifact writer. All CSV output goes through format_csv_number so that runs
// are byte-reproducible.

#ifndef RISLAB_CSV_HPP
#define RISLAB_CSV_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace rislab
{

// 9 significant digits, '.' radix, no locale.
std::string format_csv_number(double value);

// Shortest representation that parses back to the identical double.
std::string format_exact_number(double value);

// Strict decimal parse of the whole token (surrounding blanks allowed).
// Returns false on any trailing garbage, empty input or overflow.
bool parse_number(std::string_view text, double &out);

std::vector<std::string> split_csv_line(std::string_view line);

// Writes to "<path>.tmp" and renames over <path>; creates parent directories.
void write_file_atomic(const std::filesystem::path &path, std::string_view content);

std::string read_file(const std::filesystem::path &path);

} // namespace rislab

#endif
