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
#include "cyclosimplex/sweep.hpp"
#include "doctest.h"

using namespace cyclosimplex;

TEST_SUITE("sweep") {
  TEST_CASE("records arrive in volume order and are thread independent") {
    SweepOptions one;
    one.width_cap = 6;
    one.widths = WidthPolicy::all;
    one.certificates = true;
    one.chunk = 3;
    SweepOptions many = one;
    many.threads = 4;
    const auto a = sweep_all({6, 2, 5000}, one);
    const auto b = sweep_all({6, 2, 5000}, many);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].volume == b[i].volume);
      CHECK(a[i].empty == b[i].empty);
      CHECK(a[i].width == b[i].width);
      CHECK(a[i].certificate == b[i].certificate);
      if (i > 0) CHECK(a[i - 1].volume < a[i].volume);
    }
  }

  TEST_CASE("four empty simplices in dimension 4") {
    SweepOptions o;
    o.width_cap = 5;
    const auto records = sweep_all({4, 2, 20000}, o);
    std::vector<std::pair<std::uint64_t, int>> empty;
    for (const auto& r : records) {
      if (r.empty) empty.emplace_back(r.volume, r.width);
      if (!r.empty) CHECK(r.width_status == WidthStatus::not_computed);
    }
    CHECK(empty == std::vector<std::pair<std::uint64_t, int>>{{11, 2}, {41, 3}, {61, 3}, {101, 4}});
  }

  TEST_CASE("width cap reports a lower bound") {
    SweepOptions o;
    o.width_cap = 3;
    o.widths = WidthPolicy::all;
    const auto records = sweep_all({4, 100, 102}, o);
    REQUIRE(records.size() == 1);
    CHECK(records[0].width_status == WidthStatus::above_cap);
    CHECK(records[0].width == 3);
  }

  TEST_CASE("resume point and wave callback") {
    SweepOptions o;
    o.chunk = 2;
    o.resume_after = 100;
    std::vector<std::uint64_t> seen;
    std::size_t waves = 0;
    const auto last = sweep({4, 2, 2000}, o, [&](const SearchRecord& r) { seen.push_back(r.volume); },
                            [&](std::uint64_t) { return ++waves < 2; });
    REQUIRE_FALSE(seen.empty());
    CHECK(seen.front() > 100);
    CHECK(seen.size() == 16);  // two waves of 4 chunks of 2
    CHECK(last == seen.back());
  }

  TEST_CASE("composite sweep finds the principal orbits of non-prime moduli") {
    SweepOptions o;
    o.composite = true;
    const auto records = sweep_all({6, 6931, 6931}, o);
    CHECK(records.size() == 6);
    SweepOptions o4 = o;
    const auto r15 = sweep_all({4, 2, 200}, o4);
    for (const auto& r : r15) CHECK(r.volume % 5 <= 1);
  }

  TEST_CASE("parameter checks") {
    SweepOptions o;
    CHECK_THROWS_AS(sweep_all({5, 2, 100}, o), Error);
    CHECK_THROWS_AS(sweep_all({4, 100, 2}, o), Error);
    o.threads = 0;
    CHECK_THROWS_AS(sweep_all({4, 2, 100}, o), Error);
  }

  TEST_CASE("histogram buckets") {
    CHECK(histogram({}, 2000).empty());
    SearchRecord r;
    r.dim = 6;
    r.volume = 29;
    r.empty = true;
    const auto one = histogram({r}, 2000);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == HistogramBucket{0, 1999, 1, 0});
    SearchRecord far = r;
    far.volume = 6001;
    far.empty = false;
    const auto gap = histogram({r, far}, 2000);
    REQUIRE(gap.size() == 4);
    CHECK(gap[1] == HistogramBucket{2000, 3999, 0, 0});
    CHECK(gap[3] == HistogramBucket{6000, 7999, 0, 1});
    SearchRecord other = r;
    other.dim = 4;
    CHECK_THROWS_AS(histogram({r, other}, 2000), Error);
    CHECK_THROWS_AS(histogram({r}, 0), Error);
  }
}
