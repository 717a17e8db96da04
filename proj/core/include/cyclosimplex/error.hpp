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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclosimplex {

enum class Errc {
  BadParameters,
  NotInvertible,
  BadLength,
  SumNotZero,
  GcdNotOne,
  BoundExceeded,
  MemoryBudgetExceeded,
  BudgetExceeded,
  VerifyBudgetExceeded,
  AboveCap,
  NotPrime,
  NoRoots,
  CheckpointCorrupt,
  DegenerateGenerator,
  NotCyclic,
  BadFactor,
  ValidationFailed,
  ParseError,
  IoError,
  InternalCheck,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. The code is stable and
/// machine-readable; context carries the offending inputs (N, d, m, ...).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }
  const std::vector<std::pair<std::string, std::string>>& context() const noexcept {
    return context_;
  }

  Error& with(std::string key, std::string value) &;
  Error&& with(std::string key, std::string value) &&;

 private:
  Errc code_;
  std::vector<std::pair<std::string, std::string>> context_;
};

}  // namespace cyclosimplex
