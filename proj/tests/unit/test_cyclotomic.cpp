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

#include <set>

#include "cyclosimplex/arith.hpp"
#include "cyclosimplex/cyclotomic.hpp"
#include "cyclosimplex/error.hpp"
#include "cyclosimplex/width.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cyclosimplex;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InternalCheck;
}

std::uint64_t power_sum(const RootOrbit& o) {
  std::uint64_t s = 0;
  for (auto r : o.roots) s = (s + r) % o.modulus;
  return s;
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("fifth roots of unity modulo 11") {
    const auto o = roots_of_unity(4, 11);
    CHECK(std::set<std::uint64_t>(o.roots.begin(), o.roots.end()) == std::set<std::uint64_t>{1, 3, 9, 5, 4});
    CHECK(o.representative == 3);
    CHECK(o.roots.front() == 1);
    CHECK(o.order == 5);
  }

  TEST_CASE("roots sum to zero and have exact order") {
    for (std::uint64_t n = 3; n < 3000; ++n) {
      if (!oracle::trial_division_prime(n)) continue;
      for (int d : {2, 4, 6, 10}) {
        if ((n - 1) % (d + 1) != 0) continue;
        const auto o = roots_of_unity(d, n);
        CHECK(power_sum(o) == 0);
        CHECK(has_exact_order(o.representative, n, d + 1));
        CHECK(std::set<std::uint64_t>(o.roots.begin(), o.roots.end()).size() == o.roots.size());
      }
    }
    CHECK(power_sum(roots_of_unity(6, 29)) == 0);
  }

  TEST_CASE("errors") {
    CHECK(code_of([] { roots_of_unity(4, 13); }) == Errc::NoRoots);
    CHECK(code_of([] { roots_of_unity(4, 15); }) == Errc::NotPrime);
    CHECK(code_of([] { power_simplex(4, 15, 3); }) == Errc::SumNotZero);
  }

  TEST_CASE("generators match the published forms up to equivalence") {
    struct Row {
      int d;
      std::uint64_t n;
      std::vector<std::int64_t> b;
    };
    for (const auto& row : {Row{4, 11, {-1, 2, 7, 8, 6}}, Row{4, 101, {-1, 6, 65, 14, 17}},
                            Row{6, 6301, {1, 4073, 5097, 4587, 386, 3229, 1530}}}) {
      CAPTURE(row.n);
      CHECK(equivalent(cyclotomic_simplex(row.d, row.n), CyclicSimplex::make(row.d, row.n, row.b)));
    }
  }

  TEST_CASE("every primitive root gives an equivalent simplex") {
    const std::uint64_t n = 211;
    const auto base = cyclotomic_simplex(6, n);
    for (std::uint64_t k = 2; k < n; ++k) {
      if (has_exact_order(k, n, 7)) CHECK(equivalent(power_simplex(6, n, k), base));
    }
  }

  TEST_CASE("principal orbits for composite moduli") {
    const auto o15 = principal_primitive_orbits(3, 15);
    REQUIRE(o15.size() == 1);
    CHECK(o15[0].representative == 2);
    CHECK(o15[0].roots == std::vector<std::uint64_t>{1, 2, 4, 8});
    // -2 = 13 has order 4 but 1 + 13 + 4 + 7 = 25 is not 0 mod 15
    CHECK(has_exact_order(13, 15, 4));
    CHECK(principal_primitive_orbits(4, 15).empty());
    CHECK(principal_primitive_orbits(4, 7).empty());
    CHECK(principal_primitive_orbits(6, 6931).size() == 6);
    for (const auto& o : principal_primitive_orbits(6, 6931)) {
      CHECK(power_sum(o) == 0);
      CHECK(has_exact_order(o.representative, 6931, 7));
    }
  }

  TEST_CASE("prime modulus and prime order give one orbit") {
    for (std::uint64_t n = 3; n < 1500; ++n) {
      if (!oracle::trial_division_prime(n)) continue;
      for (int d : {2, 4, 6}) {
        if ((n - 1) % (d + 1) != 0) continue;
        const auto orbits = principal_primitive_orbits(d, n);
        REQUIRE(orbits.size() == 1);
        CHECK(orbits[0] == roots_of_unity(d, n));
      }
    }
  }

  TEST_CASE("non-primitive roots give width at most 2") {
    // d = 5 with a cube root k (order 3, not 6): 1+k+k^2 = 0 twice over.
    for (std::uint64_t n : {7ULL, 13ULL, 19ULL, 31ULL, 37ULL, 43ULL}) {
      for (std::uint64_t k = 2; k < n; ++k) {
        if (!has_exact_order(k, n, 3)) continue;
        const auto s = power_simplex(5, n, k);
        CHECK(lattice_width(s, Search::full).width <= 2);
      }
    }
  }

  TEST_CASE("composite order and prime modulus give width 1") {
    for (std::uint64_t n : {7ULL, 13ULL, 19ULL, 31ULL, 37ULL, 43ULL, 61ULL, 67ULL, 73ULL}) {
      CHECK(lattice_width(cyclotomic_simplex(5, n), Search::full).width == 1);
    }
    for (std::uint64_t n : {13ULL, 37ULL, 61ULL, 73ULL}) {
      CHECK(lattice_width(cyclotomic_simplex(3, n), Search::full).width == 1);
    }
  }
}
