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

#include "cyclosimplex/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "cyclosimplex/cyclotomic.hpp"

namespace cyclosimplex {

namespace {

using nlohmann::json;

std::string width_field(const SearchRecord& r) {
  switch (r.width_status) {
    case WidthStatus::exact:
      return std::to_string(r.width);
    case WidthStatus::above_cap:
      return ">" + std::to_string(r.width);
    case WidthStatus::not_computed:
      break;
  }
  return {};
}

void parse_width(std::string_view text, SearchRecord& r) {
  if (text.empty()) {
    r.width_status = WidthStatus::not_computed;
    return;
  }
  r.width_status = WidthStatus::exact;
  if (text.front() == '>') {
    r.width_status = WidthStatus::above_cap;
    text.remove_prefix(1);
  }
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), r.width);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::ParseError, "bad width field").with("field", std::string(text));
  }
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::ParseError, std::string("bad ") + what + " field").with("field", std::string(text));
  }
  return v;
}

bool parse_bool(std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw Error(Errc::ParseError, "bad boolean field").with("field", std::string(text));
}

// Splits one CSV line; double-quoted fields may contain commas.
std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      out.emplace_back();
    } else {
      out.back().push_back(c);
    }
  }
  if (quoted) throw Error(Errc::ParseError, "unterminated quote").with("line", std::string(line));
  return out;
}

std::string elapsed_text(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

json bigints(const std::vector<BigInt>& values) {
  json arr = json::array();
  for (const BigInt& x : values) arr.push_back(to_decimal(x));
  return arr;
}

std::string policy_name(WidthPolicy p) {
  switch (p) {
    case WidthPolicy::none:
      return "none";
    case WidthPolicy::empty_only:
      return "empty";
    case WidthPolicy::all:
      return "all";
  }
  return "?";
}

std::string format_name(Format f) {
  switch (f) {
    case Format::csv:
      return "csv";
    case Format::jsonl:
      return "jsonl";
    case Format::pretty:
      return "pretty";
  }
  return "?";
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "jsonl") return Format::jsonl;
  if (name == "pretty") return Format::pretty;
  throw Error(Errc::BadParameters, "unknown format").with("format", std::string(name));
}

std::string record_header(Format format) {
  switch (format) {
    case Format::csv:
      return "d,N,k,empty,width,certificate,elapsed_ms";
    case Format::pretty:
      return "  d            N            k  empty  width  certificate";
    case Format::jsonl:
      break;
  }
  return {};
}

std::string format_record(const SearchRecord& r, Format format, bool timing) {
  const std::string cert = r.certificate ? r.certificate->to_string() : std::string();
  switch (format) {
    case Format::csv: {
      std::string line = std::to_string(r.dim) + "," + std::to_string(r.volume) + "," + std::to_string(r.root) + "," +
                         (r.empty ? "true" : "false") + "," + width_field(r) + ",";
      if (!cert.empty()) line += "\"" + cert + "\"";
      line += ",";
      if (timing) line += elapsed_text(r.elapsed_ms);
      return line;
    }
    case Format::jsonl: {
      json j;
      j["d"] = r.dim;
      j["N"] = r.volume;
      j["k"] = r.root;
      j["empty"] = r.empty;
      if (r.width_status == WidthStatus::exact) {
        j["width"] = r.width;
      } else if (r.width_status == WidthStatus::above_cap) {
        j["width"] = width_field(r);
      } else {
        j["width"] = nullptr;
      }
      j["certificate"] = cert.empty() ? json(nullptr) : json(cert);
      j["elapsed_ms"] = timing ? json(std::stod(elapsed_text(r.elapsed_ms))) : json(nullptr);
      return j.dump();
    }
    case Format::pretty: {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%3d %12llu %12llu  %-5s  %5s  ", r.dim,
                    static_cast<unsigned long long>(r.volume), static_cast<unsigned long long>(r.root),
                    r.empty ? "yes" : "no", width_field(r).c_str());
      std::string line = buf + cert;
      if (timing) line += "  " + elapsed_text(r.elapsed_ms) + " ms";
      while (!line.empty() && line.back() == ' ') line.pop_back();
      return line;
    }
  }
  return {};
}

SearchRecord parse_record(std::string_view line, Format format) {
  SearchRecord r;
  if (format == Format::csv) {
    const auto f = split_csv(line);
    if (f.size() != 7) throw Error(Errc::ParseError, "expected 7 CSV fields").with("line", std::string(line));
    r.dim = static_cast<int>(parse_u64(f[0], "d"));
    r.volume = parse_u64(f[1], "N");
    r.root = parse_u64(f[2], "k");
    r.empty = parse_bool(f[3]);
    parse_width(f[4], r);
    if (!f[5].empty()) r.certificate = WidthCertificate::parse(f[5]);
    if (!f[6].empty()) r.elapsed_ms = std::stod(f[6]);
    return r;
  }
  if (format == Format::jsonl) {
    try {
      const json j = json::parse(line);
      r.dim = j.at("d").get<int>();
      r.volume = j.at("N").get<std::uint64_t>();
      r.root = j.at("k").get<std::uint64_t>();
      r.empty = j.at("empty").get<bool>();
      const json& w = j.at("width");
      if (w.is_number_integer()) {
        r.width = w.get<int>();
        r.width_status = WidthStatus::exact;
      } else if (w.is_string()) {
        parse_width(w.get<std::string>(), r);
      }
      if (j.at("certificate").is_string()) r.certificate = WidthCertificate::parse(j["certificate"].get<std::string>());
      if (j.at("elapsed_ms").is_number()) r.elapsed_ms = j["elapsed_ms"].get<double>();
    } catch (const json::exception& e) {
      throw Error(Errc::ParseError, e.what()).with("line", std::string(line));
    }
    return r;
  }
  throw Error(Errc::BadParameters, "pretty output cannot be parsed back");
}

std::vector<SearchRecord> read_records(const std::filesystem::path& path, Format format) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open record file").with("path", path.string());
  std::vector<SearchRecord> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first && format == Format::csv && line == record_header(Format::csv)) {
      first = false;
      continue;
    }
    first = false;
    if (line.empty()) continue;
    out.push_back(parse_record(line, format));
  }
  return out;
}

std::size_t count_invalid_certificates(const std::vector<SearchRecord>& records) {
  std::size_t bad = 0;
  for (const SearchRecord& r : records) {
    if (!r.certificate) continue;
    const bool ok = r.width_status == WidthStatus::exact && r.certificate->spread == r.width &&
                    check_certificate(r.simplex(), *r.certificate, r.width);
    bad += !ok;
  }
  return bad;
}

void Digest::update(std::string_view bytes) noexcept {
  for (unsigned char c : bytes) {
    state_ ^= c;
    state_ *= 0x100000001b3ULL;
  }
}

std::string Digest::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(state_));
  return buf;
}

void Checkpoint::save(const std::filesystem::path& path) const {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << "last_prime=" << last_volume << "\n"
        << "records=" << records << "\n"
        << "digest=" << digest << "\n"
        << "config=" << config << "\n";
    out.flush();
    if (!out) throw Error(Errc::IoError, "cannot write checkpoint").with("path", tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(Errc::IoError, "cannot replace checkpoint").with("path", path.string());
}

std::optional<Checkpoint> Checkpoint::load(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot read checkpoint").with("path", path.string());
  Checkpoint cp;
  bool seen[4] = {false, false, false, false};
  std::string line;
  try {
    while (std::getline(in, line)) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw Error(Errc::CheckpointCorrupt, "malformed checkpoint line");
      const std::string key = line.substr(0, eq);
      const std::string value = line.substr(eq + 1);
      if (key == "last_prime") {
        cp.last_volume = parse_u64(value, "last_prime");
        seen[0] = true;
      } else if (key == "records") {
        cp.records = parse_u64(value, "records");
        seen[1] = true;
      } else if (key == "digest") {
        cp.digest = value;
        seen[2] = true;
      } else if (key == "config") {
        cp.config = value;
        seen[3] = true;
      } else {
        throw Error(Errc::CheckpointCorrupt, "unknown checkpoint key").with("key", key);
      }
    }
  } catch (const Error& e) {
    if (e.code() == Errc::CheckpointCorrupt) throw Error(e).with("path", path.string());
    throw Error(Errc::CheckpointCorrupt, e.what()).with("path", path.string());
  }
  for (bool s : seen) {
    if (!s) throw Error(Errc::CheckpointCorrupt, "checkpoint is incomplete").with("path", path.string());
  }
  return cp;
}

std::string EnumerationConfig::describe() const {
  std::ostringstream s;
  s << "d=" << range.dim << " min=" << range.min_volume << " max=" << range.max_volume
    << " cap=" << options.width_cap << " widths=" << policy_name(options.widths)
    << " certificates=" << options.certificates << " composite=" << options.composite
    << " format=" << format_name(format) << " timing=" << timing;
  return s.str();
}

EnumerationSummary run_enumeration(const EnumerationConfig& config, std::ostream& fallback_out) {
  const bool checkpointing = !config.checkpoint.empty();
  if (checkpointing && config.out.empty()) {
    throw Error(Errc::BadParameters, "checkpointing needs an output file");
  }
  if (checkpointing && config.format == Format::pretty) {
    throw Error(Errc::BadParameters, "checkpointing needs csv or jsonl output");
  }

  EnumerationSummary summary;
  SweepOptions options = config.options;
  Digest digest;
  std::ofstream file;

  std::optional<Checkpoint> previous;
  if (checkpointing) previous = Checkpoint::load(config.checkpoint);
  if (previous) {
    if (previous->config != config.describe()) {
      throw Error(Errc::CheckpointCorrupt, "checkpoint belongs to a different run")
          .with("checkpoint", previous->config)
          .with("requested", config.describe());
    }
    std::ifstream in(config.out, std::ios::binary);
    if (!in) throw Error(Errc::CheckpointCorrupt, "output file of the checkpointed run is missing");
    std::uintmax_t kept = 0;
    std::string line;
    const std::string header = record_header(config.format);
    if (!header.empty()) {
      if (!std::getline(in, line) || line != header) {
        throw Error(Errc::CheckpointCorrupt, "output header does not match");
      }
      digest.update(line + "\n");
      kept += line.size() + 1;
    }
    std::vector<std::string> kept_lines;
    while (kept_lines.size() < previous->records && std::getline(in, line)) {
      if (in.eof()) break;  // a final line without newline was cut mid-write
      digest.update(line + "\n");
      kept += line.size() + 1;
      kept_lines.push_back(std::move(line));
    }
    if (kept_lines.size() != previous->records || digest.hex() != previous->digest) {
      throw Error(Errc::CheckpointCorrupt, "output does not match the checkpoint digest")
          .with("path", config.out.string());
    }
    for (const auto& kept_line : kept_lines) summary.empty += parse_record(kept_line, config.format).empty;
    summary.records = kept_lines.size();
    in.close();
    std::filesystem::resize_file(config.out, kept);
    file.open(config.out, std::ios::binary | std::ios::app);
    options.resume_after = previous->last_volume;
    summary.resumed = true;
  } else if (!config.out.empty()) {
    file.open(config.out, std::ios::binary | std::ios::trunc);
  }
  if (!config.out.empty() && !file) throw Error(Errc::IoError, "cannot open output").with("path", config.out.string());
  std::ostream& out = config.out.empty() ? fallback_out : file;

  if (!summary.resumed) {
    const std::string header = record_header(config.format);
    if (!header.empty()) {
      out << header << "\n";
      digest.update(header + "\n");
    }
  }

  std::size_t waves = 0;
  auto sink = [&](const SearchRecord& r) {
    const std::string line = format_record(r, config.format, config.timing) + "\n";
    out << line;
    digest.update(line);
    ++summary.records;
    summary.empty += r.empty;
  };
  auto on_wave = [&](std::uint64_t last) {
    out.flush();
    if (!out) throw Error(Errc::IoError, "write failed");
    if (checkpointing) Checkpoint{last, summary.records, digest.hex(), config.describe()}.save(config.checkpoint);
    ++waves;
    if (config.halt_after_waves > 0 && waves >= config.halt_after_waves) {
      summary.halted = true;
      return false;
    }
    return true;
  };
  summary.last_volume = sweep(config.range, options, sink, on_wave);
  out.flush();
  if (!out) throw Error(Errc::IoError, "write failed");
  if (checkpointing) {
    Checkpoint{summary.last_volume, summary.records, digest.hex(), config.describe()}.save(config.checkpoint);
  }
  return summary;
}

CirculantInfo circulant_info(int d, std::int64_t m, bool verify) {
  CirculantInfo info;
  info.d = d;
  info.m = m;
  info.volume = volume(d, m);
  info.width = width_circulant(d, m, verify);
  if (d % 2 == 0) {
    info.empty = is_empty_circulant(d, m);
    const FacetInfo facets = facet_volume_and_group(d, m);
    info.facet_volume = facets.facet_volume;
    info.group = facets.group;
    info.u = u_vector(d, m);
    info.m0_floor = m0(d).m0_floor;
  } else {
    info.u = adjugate(vertex_matrix(d, m)).front();
  }
  return info;
}

std::string to_json(const CirculantInfo& info) {
  json j;
  j["d"] = info.d;
  j["m"] = info.m;
  j["volume"] = to_decimal(info.volume);
  j["empty"] = info.empty ? json(*info.empty) : json(nullptr);
  j["width"] = info.width;
  j["facet_volume"] = info.facet_volume ? json(*info.facet_volume) : json(nullptr);
  j["group"] = info.group ? json(*info.group) : json(nullptr);
  j["u"] = bigints(info.u);
  j["m0_floor"] = info.m0_floor ? json(*info.m0_floor) : json(nullptr);
  return j.dump();
}

std::string to_json(const ThresholdReport& report) {
  json j;
  j["d"] = report.d;
  j["m0_floor"] = report.m0_floor;
  j["m0_float"] = report.m0_float;
  j["z"] = report.z;
  j["alpha"] = report.alpha;
  j["u_tilde_d"] = report.u_tilde_d;
  return j.dump();
}

std::string to_json(const Error& error) {
  json j;
  j["error"] = std::string(to_string(error.code()));
  j["message"] = error.what();
  json ctx = json::object();
  for (const auto& [k, v] : error.context()) ctx[k] = v;
  j["context"] = ctx;
  return j.dump();
}

}  // namespace cyclosimplex
