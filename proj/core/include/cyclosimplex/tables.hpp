// Copyright 2026 The cyclosimplex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Regression harness over the published tables of empty cyclotomic and
// circulant simplices.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cyclosimplex {

struct VerifyOptions {
  /// Adds the slow rows: the d = 10 sweep up to volume 237161 and the d = 6
  /// sweep up to the smallest width-8 simplex.
  bool long_run = false;
  /// Restrict to one table ("1", "2", "3", "4", "circulant", "threshold", "orbits").
  std::optional<std::string> table;
  unsigned threads = 1;
};

struct TableRow {
  std::string table;
  std::string label;
  bool pass = false;
  std::string detail;
};

std::vector<std::string> table_names();

/// Runs the selected tables; on_row sees each row as soon as it is decided.
std::vector<TableRow> verify_tables(const VerifyOptions& options,
                                    const std::function<void(const TableRow&)>& on_row = {});

}  // namespace cyclosimplex
