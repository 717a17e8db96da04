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

// Lattice width of cyclic simplices.
//
// An affine functional is described by its values f = (f_0, ..., f_d) at the
// vertices. It is a lattice functional iff f . b == 0 (mod N), and the simplex
// has width <= w iff some non-constant such f lies in {0..w}^{d+1}.
//
// Two searches answer "width <= w": a plain lexicographic enumeration of the
// cube, and a meet-in-the-middle search that splits the free coordinates in
// two halves, tabulates the partial dot products of each half and intersects
// the sorted tables. Both return the same certificate: the lexicographically
// least witness (coordinate 0 most significant).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclosimplex/cyclic.hpp"

namespace cyclosimplex {

struct WidthCertificate {
  std::vector<std::int64_t> functional;  // values at the vertices
  std::int64_t spread = 0;               // max - min

  /// `w=<spread> f=<f0,...,fd>`
  std::string to_string() const;
  static WidthCertificate parse(std::string_view text);

  friend bool operator==(const WidthCertificate&, const WidthCertificate&) = default;
};

/// Which functionals are enumerated.
enum class Search {
  /// The full cube {0..w}^{d+1}. Sound for any cyclic simplex.
  full,
  /// f_0 = 0 and the rest in {0..w}. Sound only when a unimodular symmetry
  /// acts transitively on the vertices (cyclotomic and circulant simplices),
  /// so that a minimising vertex can always be moved to position 0.
  symmetric,
};

/// True iff the certificate is a non-constant lattice functional for s with
/// spread <= w (and its recorded spread is its true spread).
bool check_certificate(const CyclicSimplex& s, const WidthCertificate& cert, std::int64_t w);

/// Plain enumeration in lexicographic order.
std::optional<WidthCertificate> width_at_most(const CyclicSimplex& s, int w, Search search);

inline constexpr std::size_t kDefaultHalfListCap = std::size_t{1} << 26;

/// Meet-in-the-middle with witness reconstruction. Throws
/// MemoryBudgetExceeded when a half list would exceed max_half_entries.
std::optional<WidthCertificate> width_at_most_mitm(const CyclicSimplex& s, int w, Search search,
                                                   std::size_t max_half_entries = kDefaultHalfListCap);

/// Existence-only meet-in-the-middle: the half tables are built coordinate
/// by coordinate as sorted (value, multiplicity) lists, so their size is
/// bounded by N as well, and no witness is reconstructed.
bool width_at_most_exists(const CyclicSimplex& s, int w, Search search,
                          std::size_t max_half_entries = kDefaultHalfListCap);

enum class WidthMethod { naive, mitm };

/// Outcome of a capped width computation.
struct WidthResult {
  /// Exact width when `exact`; otherwise the cap (true width > cap).
  int width = 0;
  bool exact = false;
  std::optional<WidthCertificate> certificate;
};

/// Increments w = 1, 2, ... up to cap. When `want_certificate` is false the
/// meet-in-the-middle method runs in existence-only mode.
WidthResult bounded_width(const CyclicSimplex& s, Search search, int cap,
                          WidthMethod method = WidthMethod::mitm, bool want_certificate = true);

struct LatticeWidth {
  int width;
  WidthCertificate certificate;
};

/// Least w admitting a certificate. Throws AboveCap when a cap is given and
/// exceeded. Without a cap the loop terminates: N*e_i is always a witness.
LatticeWidth lattice_width(const CyclicSimplex& s, Search search, std::optional<int> cap = std::nullopt,
                           WidthMethod method = WidthMethod::mitm);

inline constexpr std::uint64_t kDefaultEmbeddedBudget = std::uint64_t{1} << 31;

/// Width <= w for a simplex given by integer vertices v_0..v_d in R^{d+1}
/// lying on the hyperplane sum(x) = 1, with respect to the standard lattice.
///
/// Enumerates value vectors g in {0..w}^{d+1} (g_0 = 0 under Search::symmetric)
/// and accepts g when g = V^T f for an integer f, i.e. adj(V^T) g == 0 mod det V.
/// The certificate holds the values at the vertices. Throws BudgetExceeded
/// when (w+1)^free exceeds the budget, BadParameters on malformed vertices and
/// DegenerateGenerator when the vertices are affinely dependent.
std::optional<WidthCertificate> embedded_width_at_most(
    std::span<const std::vector<std::int64_t>> vertices, int w, Search search,
    std::uint64_t budget = kDefaultEmbeddedBudget);

}  // namespace cyclosimplex
