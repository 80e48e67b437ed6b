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

#include "ftcrit/casestudy.hpp"

#include "ftcrit/parser.hpp"

namespace ftcrit {

namespace {

// Rail, road and level-crossing failures under one OR. The operative
// subsystem fails only if alarms, motors, transmission and lights all have
// a failed unit.
constexpr std::string_view kLevelCrossing =
    "event x1 rate 0.018 \"Vehicle Failure\"\n"
    "event x2 rate 0.0001347 \"Human Factor\"\n"
    "event x3 rate 2.85e-06 \"Rail Failure\"\n"
    "event x4 rate 0.0001347 \"Human Factor\"\n"
    "event x5 rate 5e-08 \"Program Error\"\n"
    "event x6 rate 4e-06 \"Programmable Logic Controller Failure\"\n"
    "event x7 rate 5e-06 \"Network Communication Failure\"\n"
    "event x8 rate 5e-06 \"Power Network Failure\"\n"
    "event x9 rate 4e-04 \"Alarm Failure\"\n"
    "event x10 rate 4e-04 \"Alarm Failure\"\n"
    "event x11 rate 4e-04 \"Light Failure\"\n"
    "event x12 rate 4e-04 \"Light Failure\"\n"
    "event x13 rate 3e-06 \"Motor Failure\"\n"
    "event x14 rate 3e-06 \"Motor Failure\"\n"
    "event x15 rate 5e-05 \"Transmission System Failure\"\n"
    "event x16 rate 5e-05 \"Transmission System Failure\"\n"
    "top OR(OR(x3, x4), OR(x5, x6), AND(OR(x9, x10), OR(x13, x14), "
    "OR(x15, x16), OR(x11, x12)), OR(x7, x8), OR(x1, x2))\n";

}  // namespace

std::string_view level_crossing_ftdl() noexcept { return kLevelCrossing; }

FaultTree level_crossing() { return parse_ftdl(kLevelCrossing); }

}  // namespace ftcrit
