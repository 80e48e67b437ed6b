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

/// @file parser.hpp
/// Reader and writer for the fault-tree description language (FTDL).
///
///     # comment
///     event x1 rate 18e-3 "Vehicle Failure"
///     event x2 rate 1.347e-4 "Human Factor"
///     top OR(x1, AND(x2, NOT(x1)))
///
/// Gates: AND, OR (any arity), NOT (one child), XOR (two children),
/// NOR (one or more), NAND(n1, ...; p1, ...) where children before the
/// optional ';' are negated and those after it are not. Identifiers match
/// [A-Za-z_][A-Za-z0-9_]* and are case-sensitive; gate names are reserved.
/// A gate list may span lines; everything else is one declaration per line.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ftcrit/error.hpp"
#include "ftcrit/model.hpp"

namespace ftcrit {

enum class ParseErrorKind { Lexical, Syntax, Semantic };

std::string_view to_string(ParseErrorKind kind) noexcept;

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, ParseErrorKind kind,
             std::string message, std::string subject = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  ParseErrorKind parse_kind() const noexcept { return parse_kind_; }
  /// The message without the location prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  ParseErrorKind parse_kind_;
  std::string detail_;
};

/// Throws ParseError; model validation failures are reported as Semantic
/// errors at the offending declaration or reference.
FaultTree parse_ftdl(std::string_view source);

/// Canonical text: one `event` line per event in declaration order, then
/// the `top` line, LF line endings. Derived gates are written in their
/// desugared form, each preceded by a comment showing the original.
std::string serialize_ftdl(const FaultTree& tree);

/// Reads and parses a file. Throws Error(Io) or ParseError.
FaultTree load_ftdl(const std::string& path);

}  // namespace ftcrit
