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

// Cyclic lattice simplices in (volume, generator) form.
//
// A cyclic d-simplex of volume N is determined by a vector b in Z_N^{d+1}
// with sum(b) == 0 (mod N) and gcd(N, b_0, ..., b_d) == 1: the vector lists,
// scaled by N, the barycentric coordinates of a generator of the quotient
// group. Every lattice point then has scaled barycentric coordinates equal to
// the reduction of j*b into [0, N)^{d+1} for some j, and it lies in the closed
// simplex exactly when those coordinates sum to N.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclosimplex {

class CyclicSimplex {
 public:
  /// Validates and reduces. Throws BadLength, SumNotZero, GcdNotOne
  /// (or BadParameters for volume 0 / dim 0).
  static CyclicSimplex make(int dim, std::uint64_t volume, std::span<const std::int64_t> generator);
  static CyclicSimplex make_reduced(int dim, std::uint64_t volume, std::vector<std::uint64_t> generator);

  int dim() const noexcept { return dim_; }
  std::uint64_t volume() const noexcept { return volume_; }
  /// Entries in [0, N).
  std::span<const std::uint64_t> generator() const noexcept { return generator_; }

  /// Entries in (-N/2, N/2].
  std::vector<std::int64_t> signed_generator() const;

  /// `d=<d> N=<N> b=<b0,...,bd>` with the reduced generator.
  std::string to_string() const;
  std::string to_signed_string() const;
  /// Accepts either reduced or signed entries.
  static CyclicSimplex parse(std::string_view line);

  friend bool operator==(const CyclicSimplex&, const CyclicSimplex&) = default;

 private:
  CyclicSimplex(int dim, std::uint64_t volume, std::vector<std::uint64_t> generator)
      : dim_(dim), volume_(volume), generator_(std::move(generator)) {}

  int dim_;
  std::uint64_t volume_;
  std::vector<std::uint64_t> generator_;
};

/// Scaled barycentric coordinates of the lattice point j*b (mod N).
struct LatticePointBary {
  std::uint64_t index;
  std::vector<std::uint64_t> numerators;

  friend bool operator==(const LatticePointBary&, const LatticePointBary&) = default;
};

/// Some j in [1, N) whose reduction sums to N, if any. Scans j and N-j
/// together: the reduction of (N-j)b is N - (jb) on the nonzero coordinates.
std::optional<std::uint64_t> find_lattice_point(const CyclicSimplex& s);

/// True iff the vertices are the only lattice points.
bool is_empty(const CyclicSimplex& s);

/// (gcd(N, b_0), ..., gcd(N, b_d)).
std::vector<std::uint64_t> facet_volumes(const CyclicSimplex& s);

/// Unimodular equivalence: same volume and b' is a unit multiple of a
/// permutation of b.
bool equivalent(const CyclicSimplex& a, const CyclicSimplex& b);

/// The empty tetrahedron T(p, q), volume q, generator (p, -p, -1, 1).
CyclicSimplex white_simplex(std::uint64_t p, std::uint64_t q);

inline constexpr std::uint64_t kDefaultPointScanBound = 10'000'000;

/// Every non-vertex lattice point of the closed simplex, by a full scan of
/// j = 1..N-1. Throws BoundExceeded when N > bound.
std::vector<LatticePointBary> lattice_points_in(const CyclicSimplex& s,
                                                std::uint64_t bound = kDefaultPointScanBound);

std::string join_numbers(std::span<const std::int64_t> values);
std::string join_numbers(std::span<const std::uint64_t> values);
std::vector<std::int64_t> parse_number_list(std::string_view text);

}  // namespace cyclosimplex
