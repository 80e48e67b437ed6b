// Copyright 2026 The ftcrit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string_view>

#include "ftcrit/model.hpp"

namespace ftcrit {

/// Signaling system of a railway level crossing: 16 basic events with
/// exponential failure rates, in canonical FTDL.
std::string_view level_crossing_ftdl() noexcept;

FaultTree level_crossing();

}  // namespace ftcrit
