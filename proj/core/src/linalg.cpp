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

#include "cyclosimplex/linalg.hpp"

#include <utility>

#include "cyclosimplex/error.hpp"

namespace cyclosimplex {

BigInt determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != n) throw Error(Errc::BadParameters, "determinant of a non-square matrix");
  }
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.size();
  const BigInt det = determinant(m);
  IntMatrix adj(n, std::vector<BigInt>(n, 0));
  if (det == 0) return adj;

  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = BigRational(m[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (a[pivot][col] == 0) ++pivot;  // nonsingular, so a pivot exists
    std::swap(a[col], a[pivot]);
    const BigRational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const BigRational factor = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= factor * a[col][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const BigRational v = a[i][n + j] * BigRational(det);
      if (denominator(v) != 1) throw Error(Errc::InternalCheck, "adjugate entry is not integral");
      adj[i][j] = numerator(v);
    }
  }
  return adj;
}

IntMatrix transpose(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix t(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[j][i] = m[i][j];
  }
  return t;
}

}  // namespace cyclosimplex
