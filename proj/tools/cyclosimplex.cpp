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

// Command-line front end: cyclotomic sweeps, width and emptiness of cyclic
// simplices, circulant summaries and the table verification harness.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cyclosimplex/circulant.hpp"
#include "cyclosimplex/cyclic.hpp"
#include "cyclosimplex/cyclotomic.hpp"
#include "cyclosimplex/error.hpp"
#include "cyclosimplex/report.hpp"
#include "cyclosimplex/sweep.hpp"
#include "cyclosimplex/tables.hpp"
#include "cyclosimplex/width.hpp"

namespace cs = cyclosimplex;

namespace {

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

const std::map<std::string, cs::WidthPolicy> kPolicies = {
    {"none", cs::WidthPolicy::none}, {"empty", cs::WidthPolicy::empty_only}, {"all", cs::WidthPolicy::all}};

const std::vector<std::string> kFormats = {"csv", "jsonl", "pretty"};

struct EnumerateArgs {
  int dim = 0;
  std::uint64_t min_volume = 2;
  std::uint64_t max_volume = 0;
  int width_cap = 0;
  std::string widths = "empty";
  bool certificates = false;
  unsigned threads = default_threads();
  std::size_t chunk = 64;
  std::string checkpoint;
  std::string out;
  std::string format = "csv";
  bool composite = false;
  bool timing = false;
  std::size_t halt_after_waves = 0;
};

int run_enumerate(const EnumerateArgs& a) {
  if (a.dim % 2 != 0) {
    throw cs::Error(cs::Errc::BadParameters,
                    "odd dimension: d+1 is composite, so every cyclotomic simplex of this dimension has width 1 "
                    "and cannot be a hard case; sweeps are restricted to even d")
        .with("d", std::to_string(a.dim));
  }
  cs::EnumerationConfig config;
  config.range = {a.dim, a.min_volume, a.max_volume};
  config.options.width_cap = a.width_cap;
  config.options.widths = kPolicies.at(a.widths);
  config.options.certificates = a.certificates;
  config.options.threads = a.threads;
  config.options.chunk = a.chunk;
  config.options.composite = a.composite;
  config.format = cs::parse_format(a.format);
  config.timing = a.timing;
  config.out = a.out;
  config.checkpoint = a.checkpoint;
  config.halt_after_waves = a.halt_after_waves;
  const auto summary = cs::run_enumeration(config, std::cout);
  std::cerr << summary.records << " records, " << summary.empty << " empty"
            << (summary.resumed ? ", resumed" : "") << (summary.halted ? ", halted" : "") << "\n";
  return 0;
}

struct BuildArgs {
  int dim = 0;
  std::uint64_t volume = 0;
  std::optional<std::uint64_t> root;
  bool is_signed = false;
};

int run_build(const BuildArgs& a) {
  const cs::CyclicSimplex s = a.root ? cs::power_simplex(a.dim, a.volume, *a.root) : cs::cyclotomic_simplex(a.dim, a.volume);
  std::cout << (a.is_signed ? s.to_signed_string() : s.to_string()) << "\n";
  return 0;
}

struct OrbitArgs {
  int dim = 0;
  std::uint64_t volume = 0;
  int width_cap = 0;
};

int run_orbits(const OrbitArgs& a) {
  cs::SweepOptions options;
  options.width_cap = a.width_cap;
  options.widths = cs::WidthPolicy::all;
  for (const auto& orbit : cs::principal_primitive_orbits(a.dim, a.volume)) {
    std::cout << "k=" << orbit.representative << " roots=" << cs::join_numbers(std::span<const std::uint64_t>(orbit.roots));
    if (a.width_cap > 0) {
      const auto r = cs::classify(a.dim, a.volume, orbit.representative, options);
      std::cout << " empty=" << (r.empty ? "true" : "false") << " width="
                << (r.width_status == cs::WidthStatus::above_cap ? ">" : "") << r.width;
    }
    std::cout << "\n";
  }
  return 0;
}

struct HistogramArgs {
  std::string in;
  std::string format = "csv";
  std::uint64_t bucket = 2000;
};

int run_histogram(const HistogramArgs& a) {
  const auto records = cs::read_records(a.in, cs::parse_format(a.format));
  std::cout << "lo,hi,empty,non_empty\n";
  for (const auto& b : cs::histogram(records, a.bucket)) {
    std::cout << b.lo << "," << b.hi << "," << b.empty << "," << b.non_empty << "\n";
  }
  return 0;
}

struct CheckArgs {
  std::uint64_t volume = 0;
  std::string generator;
  std::optional<int> dim;
  std::optional<int> width_cap;
  bool symmetric = false;
  std::string method = "mitm";
};

cs::CyclicSimplex parse_simplex(const CheckArgs& a) {
  const auto b = cs::parse_number_list(a.generator);
  const int d = a.dim.value_or(static_cast<int>(b.size()) - 1);
  return cs::CyclicSimplex::make(d, a.volume, b);
}

int run_width(const CheckArgs& a) {
  const auto s = parse_simplex(a);
  const auto method = a.method == "naive" ? cs::WidthMethod::naive : cs::WidthMethod::mitm;
  const auto search = a.symmetric ? cs::Search::symmetric : cs::Search::full;
  if (a.width_cap) {
    const auto r = cs::bounded_width(s, search, *a.width_cap, method, true);
    if (!r.exact) {
      std::cout << ">" << *a.width_cap << "\n";
      return 0;
    }
    std::cout << r.certificate->to_string() << "\n";
    return 0;
  }
  std::cout << cs::lattice_width(s, search, std::nullopt, method).certificate.to_string() << "\n";
  return 0;
}

int run_empty(const CheckArgs& a) {
  const auto s = parse_simplex(a);
  if (auto j = cs::find_lattice_point(s)) {
    std::cout << "non-empty j=" << *j << "\n";
  } else {
    std::cout << "empty\n";
  }
  return 0;
}

struct CirculantArgs {
  std::optional<int> dim;
  std::int64_t m = 0;
  bool verify = false;
  std::string format = "jsonl";
};

int run_circulant_table(const CirculantArgs& a) {
  std::vector<std::pair<int, std::int64_t>> rows;
  if (a.dim) {
    const auto top = cs::m0(*a.dim).m0_floor + 1;
    for (std::int64_t m = 1; m <= top; ++m) rows.emplace_back(*a.dim, m);
  } else {
    rows = {{4, 2}, {6, 3}, {8, 4}, {16, 9}, {30, 17}, {46, 26}, {60, 34}};
  }
  const bool csv = a.format == "csv";
  if (csv) std::cout << "d,m,volume,empty,width,facet_volume,group\n";
  for (const auto& [d, m] : rows) {
    const auto info = cs::circulant_info(d, m, a.verify);
    if (csv) {
      std::cout << d << "," << m << "," << cs::to_decimal(info.volume) << "," << (*info.empty ? "true" : "false") << ","
                << info.width << "," << *info.facet_volume << "," << *info.group << "\n";
    } else {
      std::cout << cs::to_json(info) << "\n";
    }
  }
  return 0;
}

struct VerifyArgs {
  bool long_run = false;
  std::optional<std::string> table;
  unsigned threads = default_threads();
};

int run_verify(const VerifyArgs& a) {
  cs::VerifyOptions options;
  options.long_run = a.long_run;
  options.table = a.table;
  options.threads = a.threads;
  std::size_t failed = 0, total = 0;
  cs::verify_tables(options, [&](const cs::TableRow& row) {
    ++total;
    failed += !row.pass;
    std::cout << (row.pass ? "PASS" : "FAIL") << " [" << row.table << "] " << row.label;
    if (!row.detail.empty()) std::cout << " (" << row.detail << ")";
    std::cout << std::endl;
  });
  std::cout << total - failed << "/" << total << " rows passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empty lattice simplices: cyclotomic sweeps, widths and circulant families"};
  app.require_subcommand(1);
  int status = 0;

  auto* cyclo = app.add_subcommand("cyclotomic", "Cyclotomic simplices")->require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate = cyclo->add_subcommand("enumerate", "Sweep prime volumes N == 1 (mod d+1)");
  enumerate->add_option("--dim", en.dim, "Dimension (even)")->required();
  enumerate->add_option("--min-volume", en.min_volume, "Smallest volume")->capture_default_str();
  enumerate->add_option("--max-volume", en.max_volume, "Largest volume")->required();
  enumerate->add_option("--width-cap", en.width_cap, "Largest width tried (0: skip widths)")->capture_default_str();
  enumerate->add_option("--widths", en.widths, "Which simplices get a width")
      ->check(CLI::IsMember({"none", "empty", "all"}))
      ->capture_default_str();
  enumerate->add_flag("--certificates", en.certificates, "Print width certificates");
  enumerate->add_option("--threads", en.threads, "Worker threads")->check(CLI::Range(1u, 4096u));
  enumerate->add_option("--chunk", en.chunk, "Volumes per task")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  enumerate->add_option("--checkpoint", en.checkpoint, "Checkpoint file (resumes when present)");
  enumerate->add_option("--out", en.out, "Output file (default: standard output)");
  enumerate->add_option("--format", en.format, "csv, jsonl or pretty")->check(CLI::IsMember(kFormats));
  enumerate->add_flag("--composite", en.composite, "Include composite volumes and all principal orbits");
  enumerate->add_flag("--timing", en.timing, "Fill the elapsed_ms column");
  enumerate->add_option("--halt-after-waves", en.halt_after_waves)->group("");
  enumerate->callback([&] { status = run_enumerate(en); });

  BuildArgs build;
  auto* build_cmd = cyclo->add_subcommand("build", "Print the generator of a cyclotomic simplex");
  build_cmd->add_option("--dim", build.dim)->required();
  build_cmd->add_option("--volume", build.volume)->required();
  build_cmd->add_option("--root", build.root, "Use this root instead of the canonical one");
  build_cmd->add_flag("--signed", build.is_signed, "Entries in (-N/2, N/2]");
  build_cmd->callback([&] { status = run_build(build); });

  OrbitArgs orb;
  auto* orbits = cyclo->add_subcommand("orbits", "Principal orbits of (d+1)-th roots of unity, any modulus");
  orbits->add_option("--dim", orb.dim)->required();
  orbits->add_option("--volume", orb.volume)->required();
  orbits->add_option("--width-cap", orb.width_cap, "Also classify each orbit's simplex");
  orbits->callback([&] { status = run_orbits(orb); });

  HistogramArgs hist;
  auto* histogram = cyclo->add_subcommand("histogram", "Empty/non-empty counts per volume bucket");
  histogram->add_option("--in", hist.in, "Sweep output")->required()->check(CLI::ExistingFile);
  histogram->add_option("--format", hist.format)->check(CLI::IsMember({"csv", "jsonl"}));
  histogram->add_option("--bucket", hist.bucket)->capture_default_str();
  histogram->callback([&] { status = run_histogram(hist); });

  CheckArgs wa;
  auto* width = app.add_subcommand("width", "Lattice width of a cyclic simplex");
  width->add_option("--volume", wa.volume)->required();
  width->add_option("--generator", wa.generator, "Comma-separated b_0,...,b_d")->required();
  width->add_option("--dim", wa.dim);
  width->add_option("--width-cap", wa.width_cap);
  width->add_flag("--symmetric", wa.symmetric, "Fix f_0 = 0 (vertex-transitive simplices only)");
  width->add_option("--method", wa.method)->check(CLI::IsMember({"naive", "mitm"}))->capture_default_str();
  width->callback([&] { status = run_width(wa); });

  CheckArgs ea;
  auto* empty = app.add_subcommand("empty", "Emptiness of a cyclic simplex");
  empty->add_option("--volume", ea.volume)->required();
  empty->add_option("--generator", ea.generator)->required();
  empty->add_option("--dim", ea.dim);
  empty->callback([&] { status = run_empty(ea); });

  auto* circ = app.add_subcommand("circulant", "Circulant simplices S(d, m)")->require_subcommand(1);
  CirculantArgs ca;
  auto* info = circ->add_subcommand("info", "Volume, emptiness, width and facets");
  info->add_option("--dim", ca.dim)->required();
  info->add_option("--m", ca.m)->required();
  info->add_flag("--verify", ca.verify, "Cross-check the width by search (d <= 8)");
  info->callback([&] { status = (std::cout << cs::to_json(cs::circulant_info(*ca.dim, ca.m, ca.verify)) << "\n", 0); });

  auto* m0 = circ->add_subcommand("m0", "Emptiness threshold");
  m0->add_option("--dim", ca.dim)->required();
  m0->callback([&] { status = (std::cout << cs::to_json(cs::m0(*ca.dim)) << "\n", 0); });

  auto* table = circ->add_subcommand("table", "Rows m = 1..floor(m0)+1, or the headline rows");
  table->add_option("--dim", ca.dim);
  table->add_option("--format", ca.format)->check(CLI::IsMember({"csv", "jsonl"}))->capture_default_str();
  table->add_flag("--verify", ca.verify);
  table->callback([&] { status = run_circulant_table(ca); });

  auto* verify = app.add_subcommand("verify", "Regression checks")->require_subcommand(1);
  VerifyArgs va;
  auto* tables = verify->add_subcommand("tables", "Reproduce the published tables");
  tables->add_flag("--long", va.long_run, "Include the slow rows");
  tables->add_option("--table", va.table)->check(CLI::IsMember(cs::table_names()));
  tables->add_option("--threads", va.threads)->check(CLI::Range(1u, 4096u));
  tables->callback([&] { status = run_verify(va); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const cs::Error& e) {
    std::cerr << cs::to_json(e) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << cs::to_json(cs::Error(cs::Errc::InternalCheck, e.what())) << "\n";
    return 1;
  }
  return status;
}
