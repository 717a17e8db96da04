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

#include "cyclosimplex/error.hpp"

namespace cyclosimplex {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::BadParameters: return "BadParameters";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::BadLength: return "BadLength";
    case Errc::SumNotZero: return "SumNotZero";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::VerifyBudgetExceeded: return "VerifyBudgetExceeded";
    case Errc::AboveCap: return "AboveCap";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NoRoots: return "NoRoots";
    case Errc::CheckpointCorrupt: return "CheckpointCorrupt";
    case Errc::DegenerateGenerator: return "DegenerateGenerator";
    case Errc::NotCyclic: return "NotCyclic";
    case Errc::BadFactor: return "BadFactor";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    case Errc::InternalCheck: return "InternalCheck";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

Error& Error::with(std::string key, std::string value) & {
  context_.emplace_back(std::move(key), std::move(value));
  return *this;
}

Error&& Error::with(std::string key, std::string value) && {
  context_.emplace_back(std::move(key), std::move(value));
  return std::move(*this);
}

}  // namespace cyclosimplex
