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

// Record formatting, checkpointed enumeration runs, and circulant summaries.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclosimplex/circulant.hpp"
#include "cyclosimplex/error.hpp"
#include "cyclosimplex/sweep.hpp"

namespace cyclosimplex {

enum class Format { csv, jsonl, pretty };

Format parse_format(std::string_view name);

/// Header line for the format (empty for jsonl).
std::string record_header(Format format);

/// One output line, without the trailing newline. elapsed_ms is printed only
/// when timing is set, so untimed output is reproducible byte for byte.
std::string format_record(const SearchRecord& r, Format format, bool timing);

/// Inverse of format_record for csv and jsonl. Throws ParseError.
SearchRecord parse_record(std::string_view line, Format format);

/// Reads every record of a csv or jsonl file.
std::vector<SearchRecord> read_records(const std::filesystem::path& path, Format format);

/// Number of records whose certificate fails to validate against the
/// simplex they belong to.
std::size_t count_invalid_certificates(const std::vector<SearchRecord>& records);

/// 64-bit FNV-1a, used as a running digest of emitted output.
class Digest {
 public:
  void update(std::string_view bytes) noexcept;
  std::uint64_t value() const noexcept { return state_; }
  std::string hex() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

struct Checkpoint {
  std::uint64_t last_volume = 0;
  std::uint64_t records = 0;
  std::string digest;  // hex digest of the output file up to `records`
  std::string config;

  void save(const std::filesystem::path& path) const;
  /// nullopt when the file does not exist; CheckpointCorrupt when malformed.
  static std::optional<Checkpoint> load(const std::filesystem::path& path);
};

struct EnumerationConfig {
  SweepRange range;
  SweepOptions options;
  Format format = Format::csv;
  bool timing = false;
  std::filesystem::path out;         // empty: standard output
  std::filesystem::path checkpoint;  // empty: no checkpointing
  /// Stop after this many waves, as if interrupted (0: run to completion).
  std::size_t halt_after_waves = 0;

  /// Canonical description stored in checkpoints; a resume must match it.
  std::string describe() const;
};

struct EnumerationSummary {
  std::uint64_t records = 0;
  std::uint64_t empty = 0;
  std::uint64_t last_volume = 0;
  bool resumed = false;
  bool halted = false;
};

/// Runs a sweep into the configured sink, writing a checkpoint after every
/// wave. With an existing checkpoint the output file is verified against its
/// digest, truncated to the checkpointed records, and the sweep continues.
EnumerationSummary run_enumeration(const EnumerationConfig& config, std::ostream& fallback_out);

struct CirculantInfo {
  int d = 0;
  std::int64_t m = 0;
  BigInt volume;
  std::optional<bool> empty;  // even d only
  int width = 0;
  std::optional<int> facet_volume;
  std::optional<std::string> group;
  std::vector<BigInt> u;  // first row of the adjugate of the vertex matrix
  std::optional<std::int64_t> m0_floor;
};

CirculantInfo circulant_info(int d, std::int64_t m, bool verify);

std::string to_json(const CirculantInfo& info);
std::string to_json(const ThresholdReport& report);
/// Machine-readable error description for stderr.
std::string to_json(const Error& error);

}  // namespace cyclosimplex
