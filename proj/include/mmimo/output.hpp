// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The mmimo Authors
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

// Tabular records for the command-line tools: CSV with a single header row
// or JSON lines, both with shortest round-trip decimal formatting.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mmimo {

/// Empty cell, integer, real, or text.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

enum class OutputFormat { Csv, JsonLines };

/// Shortest decimal that parses back to the same double. Locale independent.
std::string format_double(double v);

void write_csv(std::ostream& os, const Table& t);
void write_json_lines(std::ostream& os, const Table& t);
void write_table(std::ostream& os, const Table& t, OutputFormat fmt);

/// Parses CSV produced by write_csv (RFC-4180 quoting). Every field comes back
/// as text; empty fields stay empty.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace mmimo
