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

#include "cyclosimplex/cyclic.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cyclosimplex/arith.hpp"
#include "cyclosimplex/error.hpp"

namespace cyclosimplex {

CyclicSimplex CyclicSimplex::make(int dim, std::uint64_t volume,
                                  std::span<const std::int64_t> generator) {
  if (volume == 0) throw Error(Errc::BadParameters, "volume must be positive");
  std::vector<std::uint64_t> reduced;
  reduced.reserve(generator.size());
  for (std::int64_t x : generator) reduced.push_back(volume == 1 ? 0 : reduce_signed(x, volume));
  return make_reduced(dim, volume, std::move(reduced));
}

CyclicSimplex CyclicSimplex::make_reduced(int dim, std::uint64_t volume,
                                          std::vector<std::uint64_t> generator) {
  if (dim < 1) throw Error(Errc::BadParameters, "dimension must be positive");
  if (volume == 0) throw Error(Errc::BadParameters, "volume must be positive");
  if (generator.size() != static_cast<std::size_t>(dim) + 1) {
    throw Error(Errc::BadLength, "generator length must be d+1")
        .with("d", std::to_string(dim))
        .with("length", std::to_string(generator.size()));
  }
  std::uint64_t sum = 0;
  std::uint64_t g = volume;
  for (std::uint64_t& x : generator) {
    x %= volume;
    sum = volume == 1 ? 0 : add_mod(sum, x, volume);
    g = gcd_u64(g, x);
  }
  if (sum != 0) {
    throw Error(Errc::SumNotZero, "generator entries must sum to 0 mod N")
        .with("N", std::to_string(volume));
  }
  if (g != 1) {
    throw Error(Errc::GcdNotOne, "gcd(N, b) must be 1")
        .with("N", std::to_string(volume))
        .with("gcd", std::to_string(g));
  }
  return CyclicSimplex(dim, volume, std::move(generator));
}

std::vector<std::int64_t> CyclicSimplex::signed_generator() const {
  std::vector<std::int64_t> out;
  out.reserve(generator_.size());
  for (std::uint64_t x : generator_) {
    out.push_back(x > volume_ / 2 ? -static_cast<std::int64_t>(volume_ - x)
                                  : static_cast<std::int64_t>(x));
  }
  return out;
}

std::string CyclicSimplex::to_string() const {
  return "d=" + std::to_string(dim_) + " N=" + std::to_string(volume_) +
         " b=" + join_numbers(generator_);
}

std::string CyclicSimplex::to_signed_string() const {
  const auto s = signed_generator();
  return "d=" + std::to_string(dim_) + " N=" + std::to_string(volume_) + " b=" + join_numbers(s);
}

CyclicSimplex CyclicSimplex::parse(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string token;
  std::optional<long long> dim;
  std::optional<std::uint64_t> volume;
  std::optional<std::vector<std::int64_t>> gen;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw Error(Errc::ParseError, "expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "b") {
      gen = parse_number_list(value);
      continue;
    }
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw Error(Errc::ParseError, "bad number in '" + token + "'");
    }
    if (key == "d") {
      dim = static_cast<long long>(v);
    } else if (key == "N") {
      volume = v;
    } else {
      throw Error(Errc::ParseError, "unknown key '" + key + "'");
    }
  }
  if (!volume || !gen) throw Error(Errc::ParseError, "simplex line needs N= and b=");
  const int d = dim ? static_cast<int>(*dim) : static_cast<int>(gen->size()) - 1;
  return make(d, *volume, *gen);
}

std::optional<std::uint64_t> find_lattice_point(const CyclicSimplex& s) {
  const std::uint64_t n = s.volume();
  if (n <= 1) return std::nullopt;
  const auto b = s.generator();
  std::vector<std::uint64_t> c(b.size(), 0);
  const unsigned __int128 target = n;

  auto step = [&](unsigned& nonzero) {
    unsigned __int128 sum = 0;
    nonzero = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::uint64_t x = c[i] + b[i];
      if (x >= n) x -= n;
      c[i] = x;
      sum += x;
      nonzero += x != 0;
    }
    return sum;
  };

  const std::uint64_t half = (n - 1) / 2;
  for (std::uint64_t j = 1; j <= half; ++j) {
    unsigned nonzero = 0;
    const unsigned __int128 sum = step(nonzero);
    if (sum == target) return j;
    // mirror point (N - j) b
    if (sum == target * (nonzero - 1)) return n - j;
  }
  if (n % 2 == 0) {
    unsigned nonzero = 0;
    if (step(nonzero) == target) return n / 2;
  }
  return std::nullopt;
}

bool is_empty(const CyclicSimplex& s) { return !find_lattice_point(s).has_value(); }

std::vector<std::uint64_t> facet_volumes(const CyclicSimplex& s) {
  std::vector<std::uint64_t> out;
  out.reserve(s.generator().size());
  for (std::uint64_t x : s.generator()) out.push_back(gcd_u64(s.volume(), x));
  return out;
}

namespace {

std::vector<std::uint64_t> scaled_sorted(std::span<const std::uint64_t> b, std::uint64_t lambda,
                                         std::uint64_t n) {
  std::vector<std::uint64_t> out;
  out.reserve(b.size());
  for (std::uint64_t x : b) out.push_back(mul_mod(x, lambda, n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool equivalent(const CyclicSimplex& a, const CyclicSimplex& b) {
  if (a.volume() != b.volume() || a.dim() != b.dim()) return false;
  const std::uint64_t n = a.volume();
  if (n == 1) return true;
  std::vector<std::uint64_t> target(b.generator().begin(), b.generator().end());
  std::sort(target.begin(), target.end());

  const auto gen = a.generator();
  const auto pivot = std::find_if(gen.begin(), gen.end(),
                                  [n](std::uint64_t x) { return gcd_u64(x, n) == 1; });
  if (pivot != gen.end()) {
    const std::uint64_t inv = mod_inv(Residue(*pivot, n)).value();
    for (std::uint64_t y : b.generator()) {
      const std::uint64_t lambda = mul_mod(y, inv, n);
      if (gcd_u64(lambda, n) != 1) continue;
      if (scaled_sorted(gen, lambda, n) == target) return true;
    }
    return false;
  }
  for (std::uint64_t lambda = 1; lambda < n; ++lambda) {
    if (gcd_u64(lambda, n) != 1) continue;
    if (scaled_sorted(gen, lambda, n) == target) return true;
  }
  return false;
}

CyclicSimplex white_simplex(std::uint64_t p, std::uint64_t q) {
  if (q < 2 || p < 1 || p >= q || gcd_u64(p, q) != 1) {
    throw Error(Errc::BadParameters, "white_simplex needs q >= 2, 1 <= p < q, gcd(p,q) = 1")
        .with("p", std::to_string(p))
        .with("q", std::to_string(q));
  }
  return CyclicSimplex::make_reduced(3, q, {p, q - p, q - 1, 1});
}

std::vector<LatticePointBary> lattice_points_in(const CyclicSimplex& s, std::uint64_t bound) {
  const std::uint64_t n = s.volume();
  if (n > bound) {
    throw Error(Errc::BoundExceeded, "volume above the lattice point scan bound")
        .with("N", std::to_string(n))
        .with("bound", std::to_string(bound));
  }
  std::vector<LatticePointBary> out;
  for (std::uint64_t j = 1; j < n; ++j) {
    LatticePointBary p{j, {}};
    p.numerators.reserve(s.generator().size());
    std::uint64_t sum = 0;
    for (std::uint64_t x : s.generator()) {
      const std::uint64_t r = mul_mod(j, x, n);
      p.numerators.push_back(r);
      sum += r;
    }
    if (sum == n) out.push_back(std::move(p));
  }
  return out;
}

std::string join_numbers(std::span<const std::int64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string join_numbers(std::span<const std::uint64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<std::int64_t> parse_number_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(Errc::ParseError, "bad integer list '" + std::string(text) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace cyclosimplex
