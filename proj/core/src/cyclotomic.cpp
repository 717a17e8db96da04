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

#include "cyclosimplex/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

#include "cyclosimplex/arith.hpp"
#include "cyclosimplex/error.hpp"

namespace cyclosimplex {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  b %= n;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, n);
    b = mul_mod(b, b, n);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> powers(std::uint64_t k, int d, std::uint64_t n) {
  std::vector<std::uint64_t> out;
  std::uint64_t x = 1 % n;
  for (int i = 0; i <= d; ++i) {
    out.push_back(x);
    x = mul_mod(x, k, n);
  }
  return out;
}

std::uint64_t power_sum(std::span<const std::uint64_t> values, std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t x : values) s = add_mod(s, x, n);
  return s;
}

// Least k^j over exponents j coprime to the order: the canonical name of
// the set of primitive roots sharing k's powers.
std::uint64_t orbit_minimum(std::span<const std::uint64_t> pw) {
  const std::uint64_t order = pw.size();
  std::uint64_t best = pw[1 % order];
  for (std::uint64_t j = 1; j < order; ++j) {
    if (std::gcd(j, order) == 1) best = std::min(best, pw[j]);
  }
  return best;
}

void check_dimension(int d) {
  if (d < 1) throw Error(Errc::BadParameters, "dimension must be >= 1").with("d", std::to_string(d));
}

}  // namespace

bool has_exact_order(std::uint64_t k, std::uint64_t n, std::uint64_t order) {
  if (n < 2 || order == 0) return false;
  if (pow_mod(k, order, n) != 1) return false;
  for (std::uint64_t q : prime_factors(order)) {
    if (pow_mod(k, order / q, n) == 1) return false;
  }
  return true;
}

RootOrbit roots_of_unity(int d, std::uint64_t n) {
  check_dimension(d);
  if (!is_prime(n)) throw Error(Errc::NotPrime, "modulus is not prime").with("N", std::to_string(n));
  const auto order = static_cast<std::uint64_t>(d) + 1;
  if ((n - 1) % order != 0) {
    throw Error(Errc::NoRoots, "d+1 does not divide N-1")
        .with("d", std::to_string(d))
        .with("N", std::to_string(n));
  }
  std::uint64_t k = 0;
  for (std::uint64_t g = 2; g < n; ++g) {
    const std::uint64_t cand = pow_mod(g, (n - 1) / order, n);
    if (has_exact_order(cand, n, order)) {
      k = cand;
      break;
    }
  }
  if (k == 0) {
    // Only N = 2, d = 0 lands here, which check_dimension already excludes.
    throw Error(Errc::InternalCheck, "no primitive root found").with("N", std::to_string(n));
  }
  const auto pw = powers(k, d, n);
  const std::uint64_t rep = orbit_minimum(pw);
  RootOrbit orbit{n, static_cast<int>(order), rep, powers(rep, d, n)};
  if (power_sum(orbit.roots, n) != 0) {
    throw Error(Errc::InternalCheck, "prime-modulus root with nonzero power sum").with("N", std::to_string(n));
  }
  return orbit;
}

CyclicSimplex power_simplex(int d, std::uint64_t n, std::uint64_t k) {
  check_dimension(d);
  if (n < 2) throw Error(Errc::BadParameters, "modulus must be >= 2");
  return CyclicSimplex::make_reduced(d, n, powers(k % n, d, n));
}

CyclicSimplex cyclotomic_simplex(int d, std::uint64_t n) {
  const RootOrbit orbit = roots_of_unity(d, n);
  return CyclicSimplex::make_reduced(d, n, orbit.roots);
}

std::vector<RootOrbit> principal_primitive_orbits(int d, std::uint64_t n) {
  check_dimension(d);
  if (n < 2) throw Error(Errc::BadParameters, "modulus must be >= 2").with("N", std::to_string(n));
  const auto order = static_cast<std::uint64_t>(d) + 1;
  std::vector<RootOrbit> out;
  for (std::uint64_t k = 2; k < n; ++k) {
    const auto pw = powers(k, d, n);
    if (mul_mod(pw.back(), k, n) != 1) continue;
    if (power_sum(pw, n) != 0) continue;
    if (!has_exact_order(k, n, order)) continue;
    if (orbit_minimum(pw) != k) continue;
    out.push_back(RootOrbit{n, static_cast<int>(order), k, pw});
  }
  return out;
}

}  // namespace cyclosimplex
