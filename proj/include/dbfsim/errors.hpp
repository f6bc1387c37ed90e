// SPDX-License-Identifier: Apache-2.0
//
// dbfsim - behavioral model of a digital beamforming uplink
// Copyright (C) 2026 the dbfsim developers
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

#pragma once

#include <stdexcept>
#include <string>

namespace dbfsim {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& reason) : std::runtime_error("config error: " + reason) {}
};

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error("dimension mismatch: " + what) {}
};

struct IllConditionedError : std::runtime_error {
    explicit IllConditionedError(const std::string& what)
        : std::runtime_error("ill-conditioned system: " + what) {}
};

struct ZeroPowerError : std::runtime_error {
    explicit ZeroPowerError(const std::string& what) : std::runtime_error("zero-power signal: " + what) {}
};

struct AngleRangeError : std::runtime_error {
    explicit AngleRangeError(const std::string& what) : std::runtime_error("angle out of range: " + what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error("i/o error: " + what) {}
};

} // namespace dbfsim
