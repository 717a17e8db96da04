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

// Parallel sweep over the cyclotomic simplices of one dimension.
//
// Volumes are processed in waves: each wave is cut into chunks, worker
// threads claim chunks from a shared counter, and the finished wave is
// emitted in increasing (N, k) order. Output is therefore independent of the
// thread count.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cyclosimplex/width.hpp"

namespace cyclosimplex {

struct SweepRange {
  int dim = 4;
  std::uint64_t min_volume = 2;
  std::uint64_t max_volume = 0;
};

enum class WidthPolicy { none, empty_only, all };

struct SweepOptions {
  int width_cap = 0;  // 0 disables width computation
  WidthPolicy widths = WidthPolicy::empty_only;
  bool certificates = false;
  unsigned threads = 1;
  std::size_t chunk = 64;
  /// Every modulus with a principal orbit, not only primes.
  bool composite = false;
  /// Records with volume <= this are skipped (resume point).
  std::uint64_t resume_after = 0;
};

enum class WidthStatus { not_computed, exact, above_cap };

struct SearchRecord {
  int dim = 0;
  std::uint64_t volume = 0;
  std::uint64_t root = 0;  // orbit representative k
  bool empty = false;
  WidthStatus width_status = WidthStatus::not_computed;
  int width = 0;  // exact width, or the cap when above_cap
  std::optional<WidthCertificate> certificate;
  double elapsed_ms = 0;

  CyclicSimplex simplex() const;
};

/// Classifies one simplex: emptiness, then width per the options.
SearchRecord classify(int dim, std::uint64_t volume, std::uint64_t root, const SweepOptions& options);

/// Called once per finished wave with the last volume it covered.
using WaveCallback = std::function<bool(std::uint64_t last_volume)>;

/// Streams records to sink in increasing (N, k) order. The wave callback may
/// return false to stop early. A failing record aborts the sweep with an
/// Error carrying its N. Returns the last volume fully covered.
std::uint64_t sweep(const SweepRange& range, const SweepOptions& options,
                    const std::function<void(const SearchRecord&)>& sink,
                    const WaveCallback& on_wave = {});

std::vector<SearchRecord> sweep_all(const SweepRange& range, const SweepOptions& options);

struct HistogramBucket {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;  // inclusive
  std::size_t empty = 0;
  std::size_t non_empty = 0;

  friend bool operator==(const HistogramBucket&, const HistogramBucket&) = default;
};

/// Buckets [j*w, (j+1)*w - 1] from the lowest to the highest occupied one.
/// Throws BadParameters for mixed dimensions or a zero bucket width.
std::vector<HistogramBucket> histogram(const std::vector<SearchRecord>& records, std::uint64_t bucket_width);

}  // namespace cyclosimplex
