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

#ifndef RISLAB_ERROR_HPP
#define RISLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rislab
{

// Root of every exception thrown by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Malformed or invalid scenario configuration. what() starts with "config error: ".
class ConfigError : public Error
{
  public:
    explicit ConfigError(const std::string &detail) : Error("config error: " + detail) {}
};

// A precondition on a numerical operation was violated.
class InvalidArgument : public Error
{
  public:
    using Error::Error;
};

// File system failures while reading or writing artifacts.
class IoError : public Error
{
  public:
    using Error::Error;
};

} // namespace rislab

#endif
