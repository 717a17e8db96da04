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

#include "cyclosimplex/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyclosimplex/error.hpp"
#include "cyclosimplex/width.hpp"

namespace cyclosimplex {

namespace {

constexpr int kCrossCheckDim = 12;
constexpr int kGcdCheckDim = 20;
constexpr int kVerifyDim = 8;
constexpr std::uint64_t kSkipScanBudget = 20'000'000;

Error family_error(Errc code, const std::string& msg, int d, std::int64_t m) {
  return std::move(Error(code, msg).with("d", std::to_string(d)).with("m", std::to_string(m)));
}

void check_family(int d, std::int64_t m, bool even_only) {
  if (d < 2) throw family_error(Errc::BadParameters, "dimension must be >= 2", d, m);
  if (m < 1) throw family_error(Errc::BadParameters, "m must be >= 1", d, m);
  if (even_only && d % 2 != 0) throw family_error(Errc::BadParameters, "even dimension required", d, m);
}

BigInt power(const BigInt& base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// sum_{i <= n/2} n/(n-i) C(n-i, i) x^i y^{n-2i}: the power sum of the two
// roots of t^2 - y t - x (a Lucas-type polynomial), always an integer.
BigInt lucas_sum(int n, const BigInt& x, const BigInt& y) {
  BigInt total = 0;
  for (int i = 0; 2 * i <= n; ++i) {
    const BigInt coeff = BigInt(n) * binomial(static_cast<unsigned>(n - i), static_cast<unsigned>(i)) / (n - i);
    total += coeff * power(x, i) * power(y, n - 2 * i);
  }
  return total;
}

std::vector<std::vector<std::int64_t>> shifts(std::span<const std::int64_t> v) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(cyclic_shift(v, i));
  return out;
}

double to_double(const BigRational& x) { return x.convert_to<double>(); }

}  // namespace

std::vector<std::int64_t> cyclic_shift(std::span<const std::int64_t> v, std::size_t i) {
  const std::size_t n = v.size();
  std::vector<std::int64_t> out(n);
  for (std::size_t r = 0; r < n; ++r) out[r] = v[(r + n - i % n) % n];
  return out;
}

std::vector<std::int64_t> circulant_generator(int d, std::int64_t m) {
  check_family(d, m, false);
  std::vector<std::int64_t> v(static_cast<std::size_t>(d) + 1, 0);
  v[0] = 1;
  v[1] = m;
  v[static_cast<std::size_t>(d)] = -m;
  return v;
}

IntMatrix circulant_matrix(std::span<const std::int64_t> v) {
  const std::size_t n = v.size();
  IntMatrix mat(n, std::vector<BigInt>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) mat[r][c] = v[(r + n - c) % n];
  }
  return mat;
}

IntMatrix vertex_matrix(int d, std::int64_t m) { return circulant_matrix(circulant_generator(d, m)); }

ContinuantTable::ContinuantTable(int max_index, std::int64_t m) : m_(m) {
  if (max_index < -1) throw Error(Errc::BadParameters, "continuant index must be >= -1");
  const BigInt m2 = BigInt(m) * m;
  values_.reserve(static_cast<std::size_t>(max_index) + 2);
  values_.push_back(0);
  if (max_index >= 0) values_.push_back(1);
  for (int k = 1; k <= max_index; ++k) {
    const std::size_t i = static_cast<std::size_t>(k) + 1;
    values_.push_back(values_[i - 1] + m2 * values_[i - 2]);
  }
}

BigInt continuant_binomial(int k, std::int64_t m) {
  if (k < 0) return 0;
  const BigInt m2 = BigInt(m) * m;
  BigInt total = 0;
  for (int i = 0; 2 * i <= k; ++i) {
    total += binomial(static_cast<unsigned>(k - i), static_cast<unsigned>(i)) * power(m2, i);
  }
  return total;
}

BigInt volume(int d, std::int64_t m) {
  check_family(d, m, false);
  if (d % 2 != 0) return general_circulant_volume(circulant_generator(d, m));
  const BigInt sum = lucas_sum(d + 1, BigInt(m) * m, 1);
  const ContinuantTable c(d, m);
  if (sum != c[d] + 2 * BigInt(m) * m * c[d - 1]) {
    throw family_error(Errc::InternalCheck, "binomial volume disagrees with continuants", d, m);
  }
  if (d <= kCrossCheckDim && abs(determinant(vertex_matrix(d, m))) != sum) {
    throw family_error(Errc::InternalCheck, "binomial volume disagrees with determinant", d, m);
  }
  return sum;
}

BigInt general_circulant_volume(std::span<const std::int64_t> v) {
  if (v.size() < 2) throw Error(Errc::BadParameters, "generator needs at least two entries");
  BigInt sum = 0;
  for (std::int64_t x : v) sum += x;
  if (sum == 0) throw Error(Errc::BadParameters, "generator entries sum to zero");
  const BigInt det = determinant(circulant_matrix(v));
  if (det == 0) throw Error(Errc::DegenerateGenerator, "circulant determinant vanishes");
  if (det % sum != 0) throw Error(Errc::InternalCheck, "determinant not divisible by the entry sum");
  return abs(det / sum);
}

BigInt three_term_circulant_determinant(int d, std::int64_t a, std::int64_t b, std::int64_t c) {
  if (d < 1) throw Error(Errc::BadParameters, "dimension must be >= 1");
  const int n = d + 1;
  const BigInt sign = d % 2 == 0 ? 1 : -1;
  return power(BigInt(a), n) + power(BigInt(c), n) + sign * lucas_sum(n, -BigInt(a) * c, BigInt(b));
}

std::vector<BigInt> u_vector(int d, std::int64_t m) {
  check_family(d, m, true);
  const ContinuantTable c(d, m);
  std::vector<BigInt> u;
  for (int k = 0; k <= d; ++k) {
    BigInt second = c[k - 1] * power(BigInt(m), d + 1 - k);
    if ((d + k - 1) % 2 != 0) second = -second;
    u.push_back(c[d - k] * power(BigInt(m), k) + second);
  }
  if (d <= kCrossCheckDim) {
    const IntMatrix mat = vertex_matrix(d, m);
    const BigInt det = determinant(mat);
    for (std::size_t col = 0; col < mat.size(); ++col) {
      BigInt dot = 0;
      for (std::size_t r = 0; r < mat.size(); ++r) dot += u[r] * mat[r][col];
      if (dot != (col == 0 ? det : BigInt(0))) {
        throw family_error(Errc::InternalCheck, "facet normal identity fails", d, m);
      }
    }
  }
  return u;
}

bool is_empty_circulant(int d, std::int64_t m) {
  check_family(d, m, true);
  return power(BigInt(m), d - 1) < ContinuantTable(d - 1, m)[d - 1];
}

ThresholdReport m0(int d) {
  if (d < 2 || d % 2 != 0) throw Error(Errc::BadParameters, "even dimension >= 2 required").with("d", std::to_string(d));
  ThresholdReport rep;
  rep.d = d;

  // sinh(d z) - cosh(z) is negative near 0 and positive at 1.
  auto f = [d](double z) { return std::sinh(d * z) - std::cosh(z); };
  double lo = 0, hi = 1;
  if (!(f(lo) < 0 && f(hi) > 0)) throw Error(Errc::InternalCheck, "threshold bracket has no sign change");
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  rep.z = 0.5 * (lo + hi);
  rep.m0_float = 1 / (2 * std::sinh(rep.z));

  // Largest m with m^{d-1} <= c_{d-1}(m); the predicate holds below the
  // crossing and fails above it.
  auto below = [d](std::int64_t m) { return power(BigInt(m), d - 1) <= ContinuantTable(d - 1, m)[d - 1]; };
  std::int64_t good = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(rep.m0_float)));
  if (!below(good)) {
    good = 1;
  }
  if (!below(good)) throw Error(Errc::InternalCheck, "criterion fails at m = 1").with("d", std::to_string(d));
  std::int64_t step = 1;
  std::int64_t bad = good + 1;
  while (below(bad)) {
    good = bad;
    step *= 2;
    bad = good + step;
  }
  while (bad - good > 1) {
    const std::int64_t mid = good + (bad - good) / 2;
    (below(mid) ? good : bad) = mid;
  }
  rep.m0_floor = good;

  rep.alpha = std::asinh(1.0 / (2.0 * static_cast<double>(good)));
  const ContinuantTable c(d - 1, good);
  const BigRational ratio(c[d - 1], power(BigInt(good), d - 1));
  rep.u_tilde_d = (1.0 - to_double(ratio)) * std::cosh(rep.alpha);
  return rep;
}

int width_circulant(int d, std::int64_t m, bool verify) {
  check_family(d, m, false);
  if (d % 2 == 0 && m > std::numeric_limits<int>::max() / 2) {
    throw family_error(Errc::BadParameters, "m too large for an int width", d, m);
  }
  const int width = d % 2 != 0 ? 1 : static_cast<int>(2 * m);
  if (!verify) return width;
  if (d > kVerifyDim) throw family_error(Errc::VerifyBudgetExceeded, "width verification limited to d <= 8", d, m);
  const auto vertices = shifts(circulant_generator(d, m));
  try {
    if (!embedded_width_at_most(vertices, width, Search::symmetric)) {
      throw family_error(Errc::ValidationFailed, "no functional at the claimed width", d, m);
    }
    if (width > 1 && embedded_width_at_most(vertices, width - 1, Search::symmetric)) {
      throw family_error(Errc::ValidationFailed, "functional below the claimed width", d, m);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::BudgetExceeded) throw family_error(Errc::VerifyBudgetExceeded, e.what(), d, m);
    throw;
  }
  return width;
}

FacetInfo facet_volume_and_group(int d, std::int64_t m) {
  check_family(d, m, true);
  const bool two = d % 6 == 2 && m % 2 != 0;
  FacetInfo info;
  info.facet_volume = two ? 2 : 1;
  const BigInt n = volume(d, m);
  info.group = two ? "Z_" + to_decimal(n / 2) + "+Z_2" : "Z_" + to_decimal(n);
  if (d <= kGcdCheckDim) {
    const auto u = u_vector(d, m);
    if (gcd_vec(u) != info.facet_volume) {
      throw family_error(Errc::InternalCheck, "facet volume disagrees with gcd of facet normals", d, m);
    }
  }
  return info;
}

CyclicSimplex circulant_to_cyclic(int d, std::int64_t m) {
  check_family(d, m, true);
  if (facet_volume_and_group(d, m).facet_volume != 1) {
    throw family_error(Errc::NotCyclic, "quotient group is not cyclic", d, m);
  }
  const BigInt n = volume(d, m);
  if (n > std::numeric_limits<std::uint64_t>::max() / 2) {
    throw family_error(Errc::BadParameters, "volume exceeds the word-sized cyclic range", d, m);
  }
  const auto u = u_vector(d, m);
  std::vector<std::uint64_t> b;
  for (int k = d; k >= 0; --k) {
    BigInt r = u[static_cast<std::size_t>(k)] % n;
    if (r < 0) r += n;
    b.push_back(static_cast<std::uint64_t>(r));
  }
  return CyclicSimplex::make_reduced(d, static_cast<std::uint64_t>(n), std::move(b));
}

std::vector<std::vector<std::int64_t>> brute_force_points(std::span<const std::int64_t> v, std::uint64_t budget) {
  const std::size_t n = v.size();
  if (n < 2) throw Error(Errc::BadParameters, "generator needs at least two entries");
  std::int64_t sum = 0;
  for (std::int64_t x : v) sum += x;
  if (sum != 1) throw Error(Errc::BadParameters, "generator entries must sum to 1");

  const IntMatrix mat = circulant_matrix(v);
  const BigInt det = determinant(mat);
  if (det == 0) throw Error(Errc::DegenerateGenerator, "circulant determinant vanishes");
  const IntMatrix adj = adjugate(mat);
  constexpr std::int64_t kEntryLimit = std::int64_t{1} << 40;
  if (abs(det) > kEntryLimit) throw Error(Errc::BudgetExceeded, "determinant too large for the point scan");
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (abs(adj[r][c]) > kEntryLimit) throw Error(Errc::BudgetExceeded, "adjugate too large for the point scan");
      a[r][c] = static_cast<std::int64_t>(adj[r][c]);
    }
  }
  const auto d = static_cast<std::int64_t>(det);

  // Every vertex has the same entries, so the box is [lo, hi] per coordinate.
  const auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
  const std::int64_t lo = *lo_it, hi = *hi_it;
  const auto range = static_cast<std::uint64_t>(hi - lo + 1);
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (cells > budget / range) {
      throw Error(Errc::BudgetExceeded, "point scan over budget").with("budget", std::to_string(budget));
    }
    cells *= range;
  }

  std::vector<std::vector<std::int64_t>> points;
  std::vector<std::int64_t> x(n, lo);
  for (;;) {
    std::int64_t partial = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) partial += x[i];
    x[n - 1] = 1 - partial;
    if (x[n - 1] >= lo && x[n - 1] <= hi) {
      bool inside = true;
      for (std::size_t r = 0; r < n && inside; ++r) {
        __int128 num = 0;
        for (std::size_t c = 0; c < n; ++c) num += static_cast<__int128>(a[r][c]) * x[c];
        // num / det must lie in [0, 1].
        if (d < 0) num = -num;
        inside = num >= 0 && num <= (d < 0 ? -d : d);
      }
      if (inside) points.push_back(x);
    }
    std::size_t p = n - 1;
    while (p > 0 && x[p - 1] == hi) --p;
    if (p == 0) break;
    ++x[p - 1];
    for (std::size_t q = p; q + 1 < n; ++q) x[q] = lo;
  }
  return points;
}

std::vector<std::vector<std::int64_t>> brute_force_points(int d, std::int64_t m, std::uint64_t budget) {
  return brute_force_points(circulant_generator(d, m), budget);
}

BigRational fibonacci_poly(int h, const BigRational& x) {
  if (h < 1) throw Error(Errc::BadParameters, "Fibonacci polynomial index must be >= 1");
  BigRational total = 0;
  for (int j = 0; h - 1 - 2 * j >= 0; ++j) {
    BigRational term = binomial(static_cast<unsigned>(h - 1 - j), static_cast<unsigned>(j));
    for (int e = 0; e < h - 1 - 2 * j; ++e) term *= x;
    total += term;
  }
  return total;
}

double fibonacci_poly(int h, double x) {
  if (h < 1) throw Error(Errc::BadParameters, "Fibonacci polynomial index must be >= 1");
  double total = 0;
  for (int j = 0; h - 1 - 2 * j >= 0; ++j) {
    total += binomial(static_cast<unsigned>(h - 1 - j), static_cast<unsigned>(j)).convert_to<double>() *
             std::pow(x, h - 1 - 2 * j);
  }
  return total;
}

GeneralCirculant skip_circulant(int d, std::int64_t m, int a) {
  check_family(d, m, false);
  if (a < 2 || a > (d + 1) / 2 || (d + 1) % a != 0) {
    throw Error(Errc::BadFactor, "a must be a proper divisor >= 2 of d+1")
        .with("d", std::to_string(d))
        .with("a", std::to_string(a));
  }
  GeneralCirculant out;
  out.experimental = true;
  out.generator.assign(static_cast<std::size_t>(d) + 1, 0);
  out.generator[0] = 1;
  out.generator[1] = m;
  out.generator[static_cast<std::size_t>(d + 2 - a)] = -m;

  const auto vertices = shifts(out.generator);
  if (!embedded_width_at_most(vertices, 1, Search::symmetric)) {
    throw Error(Errc::ValidationFailed, "no width-1 functional").with("d", std::to_string(d)).with("a", std::to_string(a));
  }
  try {
    if (brute_force_points(out.generator, kSkipScanBudget).size() != vertices.size()) {
      throw Error(Errc::ValidationFailed, "simplex is not empty")
          .with("d", std::to_string(d))
          .with("m", std::to_string(m))
          .with("a", std::to_string(a));
    }
    out.emptiness_checked = true;
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
  }
  return out;
}

}  // namespace cyclosimplex
