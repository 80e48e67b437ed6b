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

#include <stdexcept>
#include <string>
#include <string_view>

namespace ftcrit {

/// Every failure the library can report. The C API mirrors this list
/// one-to-one as status codes, so append only.
enum class ErrorKind {
  DuplicateEventId,
  DanglingReference,
  UnusedEvent,
  EmptyTree,
  InvalidRate,
  TooManyEvents,
  MissingState,
  MissingProbability,
  UnknownEvent,
  ProbabilityOutOfRange,
  NotFreeViolation,
  ExpansionTooLarge,
  NegativeRate,
  NegativeTime,
  TooManyCuts,
  NumericalInstability,
  SameIndex,
  SystemNeverFails,
  NoFailureSamples,
  InvalidArgument,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string subject = {})
      : std::runtime_error(std::move(message)),
        kind_(kind),
        subject_(std::move(subject)) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// The event id the error is about, if any.
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorKind kind_;
  std::string subject_;
};

}  // namespace ftcrit
