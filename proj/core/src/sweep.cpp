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

#include "cyclosimplex/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <thread>

#include "cyclosimplex/arith.hpp"
#include "cyclosimplex/cyclotomic.hpp"
#include "cyclosimplex/error.hpp"

namespace cyclosimplex {

namespace {

// Yields the moduli to examine, in increasing order.
class VolumeStream {
 public:
  VolumeStream(const SweepRange& range, bool composite, std::uint64_t start)
      : composite_(composite),
        order_(static_cast<std::uint64_t>(range.dim) + 1),
        prime_order_(is_prime(order_)),
        cursor_(start),
        hi_(range.max_volume),
        primes_(start, range.max_volume, order_, 1 % order_) {}

  std::optional<std::uint64_t> next() {
    if (!composite_) return primes_.next();
    while (cursor_ <= hi_) {
      const std::uint64_t n = cursor_++;
      // With d+1 = p prime, every prime factor of such an N is p or 1 mod p,
      // and p^2 never divides it.
      if (prime_order_ && n % order_ > 1) continue;
      return n;
    }
    return std::nullopt;
  }

 private:
  bool composite_;
  std::uint64_t order_;
  bool prime_order_;
  std::uint64_t cursor_;
  std::uint64_t hi_;
  PrimeProgression primes_;
};

std::vector<SearchRecord> records_for(const SweepRange& range, const SweepOptions& options, std::uint64_t n) {
  std::vector<SearchRecord> out;
  if (options.composite) {
    for (const RootOrbit& orbit : principal_primitive_orbits(range.dim, n)) {
      out.push_back(classify(range.dim, n, orbit.representative, options));
    }
  } else {
    out.push_back(classify(range.dim, n, roots_of_unity(range.dim, n).representative, options));
  }
  return out;
}

}  // namespace

CyclicSimplex SearchRecord::simplex() const { return power_simplex(dim, volume, root); }

SearchRecord classify(int dim, std::uint64_t volume, std::uint64_t root, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SearchRecord r;
  r.dim = dim;
  r.volume = volume;
  r.root = root;
  const CyclicSimplex s = power_simplex(dim, volume, root);
  r.empty = is_empty(s);
  const bool wanted = options.widths == WidthPolicy::all || (options.widths == WidthPolicy::empty_only && r.empty);
  if (options.width_cap > 0 && wanted) {
    auto w = bounded_width(s, Search::symmetric, options.width_cap, WidthMethod::mitm, options.certificates);
    r.width = w.width;
    r.width_status = w.exact ? WidthStatus::exact : WidthStatus::above_cap;
    r.certificate = std::move(w.certificate);
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::uint64_t sweep(const SweepRange& range, const SweepOptions& options,
                    const std::function<void(const SearchRecord&)>& sink, const WaveCallback& on_wave) {
  if (range.dim < 2 || range.dim % 2 != 0) {
    throw Error(Errc::BadParameters, "sweeps need an even dimension >= 2").with("d", std::to_string(range.dim));
  }
  if (range.min_volume > range.max_volume) {
    throw Error(Errc::BadParameters, "empty volume range")
        .with("min", std::to_string(range.min_volume))
        .with("max", std::to_string(range.max_volume));
  }
  if (options.threads == 0 || options.chunk == 0) throw Error(Errc::BadParameters, "threads and chunk must be >= 1");

  const std::uint64_t start = std::max({range.min_volume, options.resume_after + 1, std::uint64_t{2}});
  VolumeStream stream(range, options.composite, start);
  const std::size_t wave_chunks = static_cast<std::size_t>(options.threads) * 4;
  std::uint64_t covered = options.resume_after;

  for (;;) {
    std::vector<std::uint64_t> volumes;
    while (volumes.size() < wave_chunks * options.chunk) {
      auto n = stream.next();
      if (!n) break;
      volumes.push_back(*n);
    }
    if (volumes.empty()) break;

    std::vector<std::vector<SearchRecord>> results(volumes.size());
    std::vector<std::exception_ptr> errors(volumes.size());
    const std::size_t chunks = (volumes.size() + options.chunk - 1) / options.chunk;
    std::atomic<std::size_t> next_chunk{0};
    auto work = [&] {
      for (std::size_t c; (c = next_chunk.fetch_add(1)) < chunks;) {
        const std::size_t end = std::min(volumes.size(), (c + 1) * options.chunk);
        for (std::size_t i = c * options.chunk; i < end; ++i) {
          try {
            results[i] = records_for(range, options, volumes[i]);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      }
    };
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(options.threads, chunks));
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    }

    for (std::size_t i = 0; i < volumes.size(); ++i) {
      if (errors[i]) {
        try {
          std::rethrow_exception(errors[i]);
        } catch (Error& e) {
          throw std::move(e.with("N", std::to_string(volumes[i])));
        } catch (const std::exception& e) {
          throw Error(Errc::InternalCheck, e.what()).with("N", std::to_string(volumes[i]));
        }
      }
      for (const SearchRecord& r : results[i]) sink(r);
    }
    covered = volumes.back();
    if (on_wave && !on_wave(covered)) return covered;
  }
  return std::max(covered, range.max_volume);
}

std::vector<SearchRecord> sweep_all(const SweepRange& range, const SweepOptions& options) {
  std::vector<SearchRecord> out;
  sweep(range, options, [&](const SearchRecord& r) { out.push_back(r); });
  return out;
}

std::vector<HistogramBucket> histogram(const std::vector<SearchRecord>& records, std::uint64_t bucket_width) {
  if (bucket_width == 0) throw Error(Errc::BadParameters, "bucket width must be >= 1");
  std::map<std::uint64_t, HistogramBucket> buckets;
  for (const SearchRecord& r : records) {
    if (r.dim != records.front().dim) throw Error(Errc::BadParameters, "records of mixed dimension");
    const std::uint64_t j = r.volume / bucket_width;
    auto& b = buckets[j];
    b.lo = j * bucket_width;
    b.hi = b.lo + bucket_width - 1;
    (r.empty ? b.empty : b.non_empty) += 1;
  }
  std::vector<HistogramBucket> out;
  if (buckets.empty()) return out;
  for (std::uint64_t j = buckets.begin()->first; j <= buckets.rbegin()->first; ++j) {
    auto it = buckets.find(j);
    out.push_back(it != buckets.end() ? it->second
                                      : HistogramBucket{j * bucket_width, j * bucket_width + bucket_width - 1, 0, 0});
  }
  return out;
}

}  // namespace cyclosimplex
