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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclosimplex/error.hpp"
#include "cyclosimplex/report.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cyclosimplex;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("cyclosimplex-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

EnumerationConfig small_run(Format format) {
  EnumerationConfig c;
  c.range = {6, 2, 12000};
  c.options.width_cap = 7;
  c.options.widths = WidthPolicy::all;
  c.options.certificates = true;
  c.options.chunk = 8;
  c.format = format;
  return c;
}

SearchRecord sample() {
  SearchRecord r;
  r.dim = 4;
  r.volume = 101;
  r.root = 36;
  r.empty = true;
  r.width_status = WidthStatus::exact;
  r.width = 4;
  r.certificate = WidthCertificate{{0, 2, 2, 4, 1}, 4};
  r.elapsed_ms = 1.5;
  return r;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("csv lines") {
    CHECK(record_header(Format::csv) == "d,N,k,empty,width,certificate,elapsed_ms");
    const auto r = sample();
    CHECK(format_record(r, Format::csv, false) == "4,101,36,true,4,\"w=4 f=0,2,2,4,1\",");
    CHECK(format_record(r, Format::csv, true) == "4,101,36,true,4,\"w=4 f=0,2,2,4,1\",1.500");
    auto capped = r;
    capped.width_status = WidthStatus::above_cap;
    capped.width = 3;
    capped.certificate.reset();
    CHECK(format_record(capped, Format::csv, false) == "4,101,36,true,>3,,");
    const auto back = parse_record(format_record(capped, Format::csv, false), Format::csv);
    CHECK(back.width_status == WidthStatus::above_cap);
    CHECK(back.width == 3);
    CHECK(parse_record(format_record(r, Format::csv, false), Format::csv).certificate == r.certificate);
    CHECK_THROWS_AS(parse_record("4,101", Format::csv), Error);
    CHECK_THROWS_AS(parse_record("4,101,36,maybe,4,,", Format::csv), Error);
  }

  TEST_CASE("jsonl lines use the csv field names") {
    const auto line = format_record(sample(), Format::jsonl, false);
    const auto j = nlohmann::json::parse(line);
    for (const char* key : {"d", "N", "k", "empty", "width", "certificate", "elapsed_ms"}) CHECK(j.contains(key));
    CHECK(j["elapsed_ms"].is_null());
    const auto back = parse_record(line, Format::jsonl);
    CHECK(back.volume == 101);
    CHECK(back.certificate == sample().certificate);
    CHECK_THROWS_AS(parse_record("{\"d\":4}", Format::jsonl), Error);
    CHECK_THROWS_AS(parse_record("x", Format::pretty), Error);
  }

  TEST_CASE("digest") {
    Digest d;
    CHECK(d.hex() == "cbf29ce484222325");
    d.update("a");
    CHECK(d.hex() == "af63dc4c8601ec8c");
  }

  TEST_CASE("checkpoint files") {
    TempDir dir;
    const auto path = dir.path / "cp";
    CHECK_FALSE(Checkpoint::load(path).has_value());
    Checkpoint cp{1009, 12, "00ff", "d=6 min=2"};
    cp.save(path);
    const auto back = Checkpoint::load(path);
    REQUIRE(back.has_value());
    CHECK(back->last_volume == 1009);
    CHECK(back->records == 12);
    CHECK(back->digest == "00ff");
    CHECK(back->config == "d=6 min=2");
    std::ofstream(path) << "last_prime=12\nrecords=x\n";
    try {
      Checkpoint::load(path);
      FAIL("expected CheckpointCorrupt");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::CheckpointCorrupt);
    }
  }

  TEST_CASE("interrupted runs resume to identical output") {
    for (Format format : {Format::csv, Format::jsonl}) {
      TempDir dir;
      auto full = small_run(format);
      full.out = dir.path / "full.out";
      std::ostringstream unused;
      const auto whole = run_enumeration(full, unused);

      auto part = small_run(format);
      part.out = dir.path / "part.out";
      part.checkpoint = dir.path / "part.cp";
      part.halt_after_waves = 2;
      const auto first = run_enumeration(part, unused);
      CHECK(first.halted);
      CHECK(first.records < whole.records);
      // Simulate a write that happened after the checkpoint.
      std::ofstream(part.out, std::ios::app) << "garbage after the checkpoint";
      part.halt_after_waves = 0;
      const auto second = run_enumeration(part, unused);
      CHECK(second.resumed);
      CHECK(second.records == whole.records);
      CHECK(second.empty == whole.empty);
      CHECK(slurp(part.out) == slurp(full.out));

      const auto records = read_records(full.out, format);
      CHECK(records.size() == whole.records);
      CHECK(count_invalid_certificates(records) == 0);
    }
  }

  TEST_CASE("tampered output is detected on resume") {
    TempDir dir;
    auto part = small_run(Format::csv);
    part.out = dir.path / "part.csv";
    part.checkpoint = dir.path / "part.cp";
    part.halt_after_waves = 1;
    std::ostringstream unused;
    run_enumeration(part, unused);
    auto text = slurp(part.out);
    text[text.find("true")] = 'T';
    std::ofstream(part.out, std::ios::binary | std::ios::trunc) << text;
    try {
      run_enumeration(part, unused);
      FAIL("expected CheckpointCorrupt");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::CheckpointCorrupt);
    }
    auto other = part;
    other.range.max_volume = 13000;
    CHECK_THROWS_AS(run_enumeration(other, unused), Error);
  }

  TEST_CASE("checkpointing needs a file sink") {
    auto c = small_run(Format::csv);
    c.checkpoint = "cp";
    std::ostringstream out;
    CHECK_THROWS_AS(run_enumeration(c, out), Error);
  }

  TEST_CASE("standard output sink") {
    auto c = small_run(Format::csv);
    c.range.max_volume = 200;
    std::ostringstream out;
    const auto s = run_enumeration(c, out);
    CHECK(out.str().rfind("d,N,k,empty,width,certificate,elapsed_ms\n6,29,", 0) == 0);
    CHECK(s.records == 6);  // 29, 43, 71, 113, 127, 197
  }

  TEST_CASE("circulant info") {
    const auto j = nlohmann::json::parse(to_json(circulant_info(16, 9, false)));
    CHECK(j["volume"] == "36373816216801891");
    CHECK(j["empty"] == true);
    CHECK(j["width"] == 18);
    CHECK(j["facet_volume"] == 1);
    CHECK(j["m0_floor"] == 9);
    CHECK(j["u"].size() == 17);
    CHECK(j["u"][0].is_string());
    const auto odd = nlohmann::json::parse(to_json(circulant_info(5, 3, false)));
    CHECK(odd["width"] == 1);
    CHECK(odd["empty"].is_null());
    const auto t = nlohmann::json::parse(to_json(m0(60)));
    CHECK(t["m0_floor"] == 34);
    const auto e = nlohmann::json::parse(to_json(Error(Errc::NoRoots, "x").with("N", "13")));
    CHECK(e["error"] == "NoRoots");
    CHECK(e["context"]["N"] == "13");
  }
}
