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

// Circulant simplices.
//
// A generator v in Z^{d+1} defines the simplex whose vertices are the d+1
// cyclic shifts of v; with sum(v) = 1 they lie on the hyperplane sum(x) = 1.
// The tridiagonal family uses v = (1, m, 0, ..., 0, -m). Its volume, facet
// normals and emptiness are governed by the continuants
//   c_{-1} = 0, c_0 = 1, c_k = c_{k-1} + m^2 c_{k-2}.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclosimplex/arith.hpp"
#include "cyclosimplex/cyclic.hpp"
#include "cyclosimplex/linalg.hpp"

namespace cyclosimplex {

/// Shift i of the generator: entry r is v[(r - i) mod n].
std::vector<std::int64_t> cyclic_shift(std::span<const std::int64_t> v, std::size_t i);

/// (1, m, 0, ..., 0, -m) of length d+1.
std::vector<std::int64_t> circulant_generator(int d, std::int64_t m);

/// Matrix whose column i is shift i of the generator:
/// M[r][c] = v[(r - c) mod (d+1)].
IntMatrix circulant_matrix(std::span<const std::int64_t> v);
IntMatrix vertex_matrix(int d, std::int64_t m);

/// c_{-1}, ..., c_K for one m.
class ContinuantTable {
 public:
  ContinuantTable(int max_index, std::int64_t m);

  /// Valid for -1 <= k <= max_index.
  const BigInt& operator[](int k) const { return values_.at(static_cast<std::size_t>(k + 1)); }
  int max_index() const noexcept { return static_cast<int>(values_.size()) - 2; }
  std::int64_t m() const noexcept { return m_; }

 private:
  std::int64_t m_;
  std::vector<BigInt> values_;
};

/// sum_i C(k - i, i) m^{2i}, the closed form of c_k.
BigInt continuant_binomial(int k, std::int64_t m);

/// Normalized volume of the tridiagonal circulant simplex. For even d the
/// binomial sum, cross-checked against c_d + 2 m^2 c_{d-1} (and the exact
/// determinant for d <= 12); odd d goes through the determinant.
BigInt volume(int d, std::int64_t m);

/// |det(circulant) / sum(v)|. Throws BadParameters when sum(v) = 0 and
/// DegenerateGenerator when the determinant vanishes.
BigInt general_circulant_volume(std::span<const std::int64_t> v);

/// Closed form for the determinant of the circulant with generator
/// (a, b, c, 0, ..., 0) of size d+1.
BigInt three_term_circulant_determinant(int d, std::int64_t a, std::int64_t b, std::int64_t c);

/// u_k = c_{d-k} m^k + (-1)^{d+k-1} c_{k-1} m^{d+1-k}: the first row of the
/// adjugate of the vertex matrix. Even d only.
std::vector<BigInt> u_vector(int d, std::int64_t m);

/// m^{d-1} < c_{d-1}(m), exactly. Even d only.
bool is_empty_circulant(int d, std::int64_t m);

struct ThresholdReport {
  int d = 0;
  std::int64_t m0_floor = 0;  // largest m with m^{d-1} <= c_{d-1}(m)
  double m0_float = 0;        // 1 / (2 sinh z)
  double z = 0;               // root of sinh(d z) = cosh(z)
  double alpha = 0;           // arcsinh(1 / (2 m0_floor))
  double u_tilde_d = 0;       // u_d(m0_floor) cosh(alpha) / m0_floor^d
};

/// Threshold of the emptiness criterion for even d >= 2.
ThresholdReport m0(int d);

/// 1 for odd d, 2m for even d. With verify, cross-checks against the
/// embedded width search (d <= 8, else VerifyBudgetExceeded).
int width_circulant(int d, std::int64_t m, bool verify = false);

struct FacetInfo {
  int facet_volume = 1;
  std::string group;  // "Z_n" or "Z_n+Z_2"
};

/// Facet volume 2 and group Z_{N/2} + Z_2 iff d == 2 (mod 6) and m is odd.
FacetInfo facet_volume_and_group(int d, std::int64_t m);

/// Volume N and generator (u_d, ..., u_0) mod N. Throws NotCyclic when the
/// facets have volume 2.
CyclicSimplex circulant_to_cyclic(int d, std::int64_t m);

inline constexpr std::uint64_t kDefaultPointBudget = 50'000'000;

/// Lattice points of the closed simplex spanned by the shifts of v (which must
/// sum to 1), by scanning the vertex bounding box on the hyperplane sum = 1.
/// Lexicographic order. Throws BudgetExceeded when the box is too large.
std::vector<std::vector<std::int64_t>> brute_force_points(std::span<const std::int64_t> v,
                                                          std::uint64_t budget = kDefaultPointBudget);
std::vector<std::vector<std::int64_t>> brute_force_points(int d, std::int64_t m,
                                                          std::uint64_t budget = kDefaultPointBudget);

/// F_h(x) = sum_j C(h-1-j, j) x^{h-1-2j}, h >= 1.
BigRational fibonacci_poly(int h, const BigRational& x);
double fibonacci_poly(int h, double x);

struct GeneralCirculant {
  std::vector<std::int64_t> generator;
  bool experimental = false;
  bool emptiness_checked = false;  // false when the point scan was over budget
};

/// Generator with v_0 = 1, v_1 = m and v_{d+2-a} = -m, for a divisor a of d+1
/// with 2 <= a <= (d+1)/2 (a = 2 gives the tridiagonal family). Validated:
/// a width-1 functional must exist, and when the point scan fits its budget
/// the simplex must be empty. Throws BadFactor or ValidationFailed.
GeneralCirculant skip_circulant(int d, std::int64_t m, int a);

}  // namespace cyclosimplex
