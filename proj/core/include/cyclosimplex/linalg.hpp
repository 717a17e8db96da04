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

#include <vector>

#include "cyclosimplex/arith.hpp"

namespace cyclosimplex {

/// Row-major square matrix of exact integers.
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Fraction-free (Bareiss) elimination.
BigInt determinant(IntMatrix m);

/// det(m) * m^{-1}, computed by exact rational Gauss-Jordan. For a singular
/// matrix the result is the zero matrix.
IntMatrix adjugate(const IntMatrix& m);

IntMatrix transpose(const IntMatrix& m);

}  // namespace cyclosimplex
