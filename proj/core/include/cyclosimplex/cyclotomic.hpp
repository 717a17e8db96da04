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

// Cyclic simplices whose generator is the power vector of a root of unity.

#pragma once

#include <cstdint>
#include <vector>

#include "cyclosimplex/cyclic.hpp"

namespace cyclosimplex {

/// The powers of a root k of multiplicative order exactly order = d+1 modulo
/// N whose powers sum to 0 mod N. The representative is the least root
/// generating the same set of powers.
struct RootOrbit {
  std::uint64_t modulus = 0;
  int order = 0;
  std::uint64_t representative = 0;
  std::vector<std::uint64_t> roots;  // 1, k, k^2, ..., k^d

  friend bool operator==(const RootOrbit&, const RootOrbit&) = default;
};

/// Multiplicative order of k modulo n if it divides `order`, and it is exactly
/// `order`; checked through the prime factors of order.
bool has_exact_order(std::uint64_t k, std::uint64_t n, std::uint64_t order);

/// The unique orbit of (d+1)-th roots of unity modulo a prime N.
/// Throws NotPrime, or NoRoots when d+1 does not divide N-1.
RootOrbit roots_of_unity(int d, std::uint64_t n);

/// Cyclic simplex of volume N with generator (1, k, ..., k^d).
/// Throws SumNotZero when the powers do not sum to 0 mod N.
CyclicSimplex power_simplex(int d, std::uint64_t n, std::uint64_t k);

/// power_simplex of the representative of roots_of_unity(d, N).
CyclicSimplex cyclotomic_simplex(int d, std::uint64_t n);

/// Every orbit of elements of order exactly d+1 with vanishing power sum,
/// for any modulus N >= 2, by testing all candidates. Sorted by representative.
std::vector<RootOrbit> principal_primitive_orbits(int d, std::uint64_t n);

}  // namespace cyclosimplex
