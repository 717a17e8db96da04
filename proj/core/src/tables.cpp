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

#include "cyclosimplex/tables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "cyclosimplex/circulant.hpp"
#include "cyclosimplex/cyclotomic.hpp"
#include "cyclosimplex/error.hpp"
#include "cyclosimplex/sweep.hpp"

namespace cyclosimplex {

namespace {

struct PublishedCyclic {
  std::uint64_t volume;
  std::vector<std::int64_t> generator;
  int width;
};

const std::vector<PublishedCyclic> kEmpty4 = {
    {11, {-1, 2, 7, 8, 6}, 2},
    {41, {-1, 4, 25, 23, 31}, 3},
    {61, {-1, 3, 52, 27, 41}, 3},
    {101, {-1, 6, 65, 14, 17}, 4},
};

const std::vector<PublishedCyclic> kWidthSix6 = {
    {6301, {1, 4073, 5097, 4587, 386, 3229, 1530}, 6},
    {10753, {1, 8246, 5297, 376, 3632, 2367, 1587}, 6},
    {11117, {1, 6165, 9319, 10096, 8874, 1453, 8560}, 6},
    {15121, {1, 9543, 10187, 1632, 14667, 7205, 2128}, 6},
    {16493, {1, 3665, 6923, 6561, 15764, 81, 16484}, 6},
    {17683, {1, 12135, 11884, 7475, 13018, 11191, 15028}, 6},
};

struct Bucket {
  std::uint64_t lo;
  std::size_t empty;
  std::size_t non_empty;
};

const std::vector<Bucket> kHistogram6 = {
    {0, 40, 5},     {2000, 21, 23},  {4000, 10, 27},  {6000, 8, 31},  {8000, 3, 35},
    {10000, 2, 37}, {12000, 1, 29},  {14000, 1, 34},  {16000, 2, 32},
};

struct Smallest {
  int width;
  std::uint64_t volume;  // 0: no simplex of this width
  bool empty;
};

const std::vector<Smallest> kSmallest6 = {
    {1, 0, false}, {2, 29, true}, {3, 127, false}, {4, 701, true}, {5, 3347, false}, {6, 6301, true}, {7, 14197, false},
};
constexpr Smallest kSmallest6Long = {8, 32369, false};

const std::vector<Smallest> kSmallest10 = {
    {1, 23, true}, {2, 199, true}, {3, 4159, true}, {4, 55243, true},
};
constexpr Smallest kSmallest10Long = {5, 237161, true};

struct CirculantRow {
  int d;
  std::int64_t m;
  const char* volume;  // exact decimal, or empty when only a range is published
  double lo;
  double hi;
  int width;
};

const std::vector<CirculantRow> kCirculantRows = {
    {4, 2, "101", 0, 0, 4},
    {6, 3, "6301", 0, 0, 6},
    {8, 4, "719761", 0, 0, 8},
    {16, 9, "36373816216801891", 0, 0, 18},
    {30, 17, "", 2.8e38, 3.0e38, 34},
    {46, 26, "", 6.5e66, 6.7e66, 52},
    {60, 34, "", 5.3e93, 5.5e93, 68},
};

class Collector {
 public:
  Collector(const std::function<void(const TableRow&)>& on_row) : on_row_(on_row) {}

  void add(std::string table, std::string label, bool pass, std::string detail = {}) {
    rows_.push_back({std::move(table), std::move(label), pass, std::move(detail)});
    if (on_row_) on_row_(rows_.back());
  }

  std::vector<TableRow> take() { return std::move(rows_); }

 private:
  const std::function<void(const TableRow&)>& on_row_;
  std::vector<TableRow> rows_;
};

std::string width_text(const SearchRecord& r) {
  switch (r.width_status) {
    case WidthStatus::exact:
      return std::to_string(r.width);
    case WidthStatus::above_cap:
      return ">" + std::to_string(r.width);
    case WidthStatus::not_computed:
      break;
  }
  return "?";
}

const SearchRecord* find_volume(const std::vector<SearchRecord>& records, std::uint64_t n) {
  for (const auto& r : records) {
    if (r.volume == n) return &r;
  }
  return nullptr;
}

// Smallest volume per exact width among the records.
std::map<int, const SearchRecord*> smallest_per_width(const std::vector<SearchRecord>& records) {
  std::map<int, const SearchRecord*> out;
  for (const auto& r : records) {
    if (r.width_status != WidthStatus::exact) continue;
    out.emplace(r.width, &r);
  }
  return out;
}

void check_smallest(Collector& out, const std::string& table, int d, const std::vector<SearchRecord>& records,
                    const Smallest& want) {
  const auto smallest = smallest_per_width(records);
  const auto it = smallest.find(want.width);
  std::ostringstream label;
  label << "smallest d=" << d << " width " << want.width;
  if (want.volume == 0) {
    out.add(table, label.str() + ": none", it == smallest.end(),
            it == smallest.end() ? "" : "found N=" + std::to_string(it->second->volume));
    return;
  }
  label << ": N=" << want.volume << (want.empty ? " empty" : " non-empty");
  if (it == smallest.end()) {
    out.add(table, label.str(), false, "no simplex of this width in range");
    return;
  }
  const SearchRecord& r = *it->second;
  const bool pass = r.volume == want.volume && r.empty == want.empty;
  out.add(table, label.str(), pass,
          "found N=" + std::to_string(r.volume) + (r.empty ? " empty" : " non-empty"));
}

SweepOptions widths_for_all(int cap, unsigned threads) {
  SweepOptions o;
  o.width_cap = cap;
  o.widths = WidthPolicy::all;
  o.threads = threads;
  return o;
}

void table1(Collector& out, unsigned threads) {
  SweepOptions o;
  o.width_cap = 5;
  o.widths = WidthPolicy::empty_only;
  o.threads = threads;
  std::vector<SearchRecord> empty;
  sweep({4, 2, 200000}, o, [&](const SearchRecord& r) {
    if (r.empty) empty.push_back(r);
  });
  out.add("1", "d=4 N<=200000: 4 empty", empty.size() == kEmpty4.size(), std::to_string(empty.size()) + " empty");
  for (const auto& want : kEmpty4) {
    const SearchRecord* r = find_volume(empty, want.volume);
    const auto published = CyclicSimplex::make(4, want.volume, want.generator);
    const bool pass = r && r->width_status == WidthStatus::exact && r->width == want.width &&
                      equivalent(r->simplex(), published);
    out.add("1", "Cycl(4," + std::to_string(want.volume) + ") width " + std::to_string(want.width), pass,
            r ? "width " + width_text(*r) : "not found");
  }
}

std::vector<SearchRecord> sweep6(unsigned threads) { return sweep_all({6, 2, 18000}, widths_for_all(7, threads)); }

void table2(Collector& out, const std::vector<SearchRecord>& records) {
  std::size_t empty = 0;
  std::set<std::uint64_t> width6;
  for (const auto& r : records) {
    if (!r.empty) continue;
    ++empty;
    if (r.width_status == WidthStatus::exact && r.width == 6) width6.insert(r.volume);
  }
  out.add("2", "d=6 N<=18000: 88 empty", empty == 88, std::to_string(empty) + " empty");
  std::set<std::uint64_t> want;
  for (const auto& p : kWidthSix6) want.insert(p.volume);
  out.add("2", "empty width-6 volumes", width6 == want, std::to_string(width6.size()) + " volumes");
  for (const auto& p : kWidthSix6) {
    const SearchRecord* r = find_volume(records, p.volume);
    const bool pass = r && r->empty && equivalent(r->simplex(), CyclicSimplex::make(6, p.volume, p.generator));
    out.add("2", "Cycl(6," + std::to_string(p.volume) + ") generator", pass, r ? "" : "not found");
  }
}

void table3(Collector& out, const std::vector<SearchRecord>& records, const VerifyOptions& options) {
  const auto buckets = histogram(records, 2000);
  for (const auto& want : kHistogram6) {
    std::ostringstream label;
    label << "[" << want.lo << "," << want.lo + 1999 << "] " << want.empty << "/" << want.non_empty;
    const HistogramBucket* got = nullptr;
    for (const auto& b : buckets) {
      if (b.lo == want.lo) got = &b;
    }
    const bool pass = got && got->empty == want.empty && got->non_empty == want.non_empty;
    out.add("3", label.str(), pass,
            got ? std::to_string(got->empty) + "/" + std::to_string(got->non_empty) : "missing bucket");
  }
  for (const auto& want : kSmallest6) check_smallest(out, "3", 6, records, want);
  if (options.long_run) {
    const auto extended = sweep_all({6, 2, kSmallest6Long.volume}, widths_for_all(8, options.threads));
    check_smallest(out, "3", 6, extended, kSmallest6Long);
  }
}

void table4(Collector& out, const VerifyOptions& options) {
  auto spot = [&](const Smallest& want) {
    SweepOptions o = widths_for_all(want.width, 1);
    const auto orbit = roots_of_unity(10, want.volume);
    const SearchRecord r = classify(10, want.volume, orbit.representative, o);
    const bool pass = r.empty == want.empty && r.width_status == WidthStatus::exact && r.width == want.width;
    out.add("4", "Cycl(10," + std::to_string(want.volume) + ") empty width " + std::to_string(want.width), pass,
            std::string(r.empty ? "empty" : "non-empty") + " width " + width_text(r));
  };
  for (const auto& want : kSmallest10) spot(want);
  if (options.long_run) {
    spot(kSmallest10Long);
    const auto records = sweep_all({10, 2, kSmallest10Long.volume}, widths_for_all(5, options.threads));
    for (const auto& want : kSmallest10) check_smallest(out, "4", 10, records, want);
    check_smallest(out, "4", 10, records, kSmallest10Long);
  }
}

void circulant_table(Collector& out) {
  for (const auto& row : kCirculantRows) {
    const BigInt v = volume(row.d, row.m);
    bool volume_ok;
    std::string detail = to_decimal(v);
    if (*row.volume) {
      volume_ok = to_decimal(v) == row.volume;
    } else {
      const double approx = v.convert_to<double>();
      volume_ok = approx > row.lo && approx < row.hi;
      std::ostringstream s;
      s << approx;
      detail = s.str();
    }
    const bool empty = is_empty_circulant(row.d, row.m);
    const int width = width_circulant(row.d, row.m);
    std::ostringstream label;
    label << "S(" << row.d << "," << row.m << ") empty width " << row.width;
    out.add("circulant", label.str(), volume_ok && empty && width == row.width,
            "volume " + detail + (empty ? " empty" : " non-empty") + " width " + std::to_string(width));
  }
  const std::pair<std::pair<int, int>, std::uint64_t> bridges[] = {{{4, 2}, 101}, {{6, 3}, 6301}};
  for (const auto& [dm, n] : bridges) {
    const auto [d, m] = dm;
    const bool pass = equivalent(circulant_to_cyclic(d, m), cyclotomic_simplex(d, n));
    out.add("circulant", "S(" + std::to_string(d) + "," + std::to_string(m) + ") = Cycl(" + std::to_string(d) + "," +
                             std::to_string(n) + ")",
            pass);
  }
}

void threshold_table(Collector& out) {
  const std::pair<int, std::int64_t> rows[] = {{4, 2}, {16, 9}, {30, 17}, {46, 26}, {60, 34}};
  for (const auto& [d, want] : rows) {
    const auto got = m0(d).m0_floor;
    out.add("threshold", "m0_floor(" + std::to_string(d) + ") = " + std::to_string(want), got == want,
            std::to_string(got));
  }
  int mismatches = 0;
  int first_bad = 0;
  for (int d = 2; d <= 1000; d += 2) {
    const auto predicted = static_cast<std::int64_t>(std::floor(d / (2 * std::asinh(1.0))));
    if (m0(d).m0_floor != predicted) {
      if (mismatches++ == 0) first_bad = d;
    }
  }
  out.add("threshold", "m0_floor(d) = floor(d / (2 asinh 1)) for even d <= 1000", mismatches == 0,
          mismatches == 0 ? "" : std::to_string(mismatches) + " mismatches, first d=" + std::to_string(first_bad));
}

void orbit_table(Collector& out) {
  const auto orbits = principal_primitive_orbits(6, 6931);
  out.add("orbits", "N=6931 d=6: 6 orbits", orbits.size() == 6, std::to_string(orbits.size()) + " orbits");
  int non_empty = 0, empty4 = 0, empty6 = 0;
  for (const auto& o : orbits) {
    const SearchRecord r = classify(6, 6931, o.representative, widths_for_all(7, 1));
    if (!r.empty) {
      ++non_empty;
    } else if (r.width_status == WidthStatus::exact && r.width == 4) {
      ++empty4;
    } else if (r.width_status == WidthStatus::exact && r.width == 6) {
      ++empty6;
    }
  }
  out.add("orbits", "N=6931: 3 non-empty, 2 empty width 4, 1 empty width 6",
          non_empty == 3 && empty4 == 2 && empty6 == 1,
          std::to_string(non_empty) + "/" + std::to_string(empty4) + "/" + std::to_string(empty6));
}

}  // namespace

std::vector<std::string> table_names() { return {"1", "2", "3", "4", "circulant", "threshold", "orbits"}; }

std::vector<TableRow> verify_tables(const VerifyOptions& options, const std::function<void(const TableRow&)>& on_row) {
  Collector out(on_row);
  auto selected = [&](const char* name) { return !options.table || *options.table == name; };
  if (options.table) {
    const auto names = table_names();
    if (std::find(names.begin(), names.end(), *options.table) == names.end()) {
      throw Error(Errc::BadParameters, "unknown table").with("table", *options.table);
    }
  }
  if (selected("1")) table1(out, options.threads);
  if (selected("2") || selected("3")) {
    const auto records = sweep6(options.threads);
    if (selected("2")) table2(out, records);
    if (selected("3")) table3(out, records, options);
  }
  if (selected("4")) table4(out, options);
  if (selected("circulant")) circulant_table(out);
  if (selected("threshold")) threshold_table(out);
  if (selected("orbits")) orbit_table(out);
  return out.take();
}

}  // namespace cyclosimplex
