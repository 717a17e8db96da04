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

#include "cyclosimplex/width.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cyclosimplex/arith.hpp"
#include "cyclosimplex/error.hpp"
#include "cyclosimplex/linalg.hpp"

namespace cyclosimplex {

namespace {

constexpr std::uint64_t kCountSaturation = std::uint64_t{1} << 31;

std::vector<std::size_t> free_coordinates(std::size_t n, Search search) {
  std::vector<std::size_t> out;
  for (std::size_t i = search == Search::symmetric ? 1 : 0; i < n; ++i) out.push_back(i);
  return out;
}

// (w+1)^len, or nullopt when it exceeds limit.
std::optional<std::uint64_t> cube_size(int w, std::size_t len, std::uint64_t limit) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (size > limit / static_cast<std::uint64_t>(w + 1)) return std::nullopt;
    size *= static_cast<std::uint64_t>(w + 1);
  }
  if (size > limit) return std::nullopt;
  return size;
}

bool non_constant(std::span<const std::int64_t> f) {
  return std::adjacent_find(f.begin(), f.end(), std::not_equal_to<>()) != f.end();
}

WidthCertificate make_certificate(std::vector<std::int64_t> f) {
  const auto [lo, hi] = std::minmax_element(f.begin(), f.end());
  const std::int64_t spread = *hi - *lo;
  return WidthCertificate{std::move(f), spread};
}

void require_target(int w) {
  if (w < 1) throw Error(Errc::BadParameters, "target width must be >= 1").with("w", std::to_string(w));
}

// Half of the meet-in-the-middle split: the coordinates it owns and the
// generator entries (negated for the right half) it multiplies.
struct Half {
  std::vector<std::size_t> coords;
  std::vector<std::uint64_t> weights;
};

Half make_half(const CyclicSimplex& s, std::span<const std::size_t> coords, bool negate) {
  Half h;
  const std::uint64_t n = s.volume();
  for (std::size_t c : coords) {
    h.coords.push_back(c);
    const std::uint64_t b = s.generator()[c];
    h.weights.push_back(negate ? (n == 1 ? 0 : sub_mod(0, b, n)) : b);
  }
  return h;
}

struct Entry {
  std::uint64_t value;
  std::uint64_t index;
};

// Values of every digit vector of the half, indexed so that index order is
// lexicographic order of the digits (first coordinate most significant).
std::vector<Entry> tabulate(const Half& h, int w, std::uint64_t n) {
  std::vector<Entry> list{{0, 0}};
  const std::uint64_t base = static_cast<std::uint64_t>(w) + 1;
  for (std::uint64_t weight : h.weights) {
    std::vector<Entry> next;
    next.reserve(list.size() * base);
    for (const Entry& e : list) {
      std::uint64_t v = e.value;
      for (std::uint64_t x = 0; x < base; ++x) {
        next.push_back({v, e.index * base + x});
        v = n == 1 ? 0 : add_mod(v, weight, n);
      }
    }
    list = std::move(next);
  }
  return list;
}

void decode(std::uint64_t index, const Half& h, int w, std::vector<std::int64_t>& f) {
  const std::uint64_t base = static_cast<std::uint64_t>(w) + 1;
  for (std::size_t i = h.coords.size(); i-- > 0;) {
    f[h.coords[i]] = static_cast<std::int64_t>(index % base);
    index /= base;
  }
}

// For an index of a half: the constant digit value t if all digits equal t,
// -1 if not constant; -2 for an empty half (matches any t).
std::int64_t constant_digit(std::uint64_t index, std::size_t len, int w) {
  if (len == 0) return -2;
  const std::uint64_t base = static_cast<std::uint64_t>(w) + 1;
  std::uint64_t repunit = 0;
  for (std::size_t i = 0; i < len; ++i) repunit = repunit * base + 1;
  if (index % repunit != 0) return -1;
  return static_cast<std::int64_t>(index / repunit);
}

struct Split {
  Half left;
  Half right;
};

Split split_coordinates(const CyclicSimplex& s, Search search, int w, std::size_t max_half_entries) {
  const auto coords = free_coordinates(s.generator().size(), search);
  const std::size_t left_len = (coords.size() + 1) / 2;
  if (!cube_size(w, left_len, max_half_entries)) {
    throw Error(Errc::MemoryBudgetExceeded, "meet-in-the-middle half list over budget")
        .with("N", std::to_string(s.volume()))
        .with("w", std::to_string(w))
        .with("cap", std::to_string(max_half_entries));
  }
  const std::span<const std::size_t> all(coords);
  return {make_half(s, all.first(left_len), false), make_half(s, all.subspan(left_len), true)};
}

// Sorted (value, multiplicity) table of one half, built coordinate by
// coordinate; multiplicities saturate.
std::vector<std::pair<std::uint64_t, std::uint64_t>> value_counts(const Half& h, int w, std::uint64_t n,
                                                                  std::size_t max_entries) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> list{{0, 1}};
  for (std::uint64_t weight : h.weights) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> next;
    const std::size_t size = list.size() * static_cast<std::size_t>(w + 1);
    if (size > max_entries) {
      throw Error(Errc::MemoryBudgetExceeded, "existence table over budget")
          .with("N", std::to_string(n))
          .with("w", std::to_string(w));
    }
    next.reserve(size);
    std::uint64_t shift = 0;
    for (int x = 0; x <= w; ++x) {
      for (const auto& [v, c] : list) next.emplace_back(n == 1 ? 0 : add_mod(v, shift, n), c);
      shift = n == 1 ? 0 : add_mod(shift, weight, n);
    }
    std::sort(next.begin(), next.end());
    list.clear();
    for (const auto& [v, c] : next) {
      if (!list.empty() && list.back().first == v) {
        list.back().second = std::min(kCountSaturation, list.back().second + c);
      } else {
        list.emplace_back(v, c);
      }
    }
  }
  return list;
}

}  // namespace

std::string WidthCertificate::to_string() const {
  return "w=" + std::to_string(spread) + " f=" + join_numbers(functional);
}

WidthCertificate WidthCertificate::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string a, b;
  if (!(in >> a >> b) || a.rfind("w=", 0) != 0 || b.rfind("f=", 0) != 0) {
    throw Error(Errc::ParseError, "certificate must read 'w=<spread> f=<f0,...>'");
  }
  WidthCertificate cert;
  cert.functional = parse_number_list(b.substr(2));
  const auto w = parse_number_list(a.substr(2));
  if (w.size() != 1) throw Error(Errc::ParseError, "bad certificate spread");
  cert.spread = w[0];
  return cert;
}

bool check_certificate(const CyclicSimplex& s, const WidthCertificate& cert, std::int64_t w) {
  const auto b = s.generator();
  if (cert.functional.size() != b.size()) return false;
  if (!non_constant(cert.functional)) return false;
  const auto [lo, hi] = std::minmax_element(cert.functional.begin(), cert.functional.end());
  if (*hi - *lo != cert.spread || cert.spread > w) return false;
  const std::uint64_t n = s.volume();
  if (n == 1) return true;
  std::uint64_t dot = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    dot = add_mod(dot, mul_mod(reduce_signed(cert.functional[i], n), b[i], n), n);
  }
  return dot == 0;
}

std::optional<WidthCertificate> width_at_most(const CyclicSimplex& s, int w, Search search) {
  require_target(w);
  const auto b = s.generator();
  const std::uint64_t n = s.volume();
  const auto coords = free_coordinates(b.size(), search);

  // w * b_i mod N, subtracted when a digit wraps from w back to 0.
  std::vector<std::uint64_t> wrap(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    wrap[i] = n == 1 ? 0 : mul_mod(static_cast<std::uint64_t>(w), b[i], n);
  }

  std::vector<std::int64_t> f(b.size(), 0);
  std::uint64_t dot = 0;
  for (;;) {
    std::size_t p = coords.size();
    while (p > 0 && f[coords[p - 1]] == w) --p;
    if (p == 0) return std::nullopt;
    const std::size_t c = coords[p - 1];
    ++f[c];
    if (n > 1) dot = add_mod(dot, b[c], n);
    for (std::size_t q = p; q < coords.size(); ++q) {
      f[coords[q]] = 0;
      if (n > 1) dot = sub_mod(dot, wrap[coords[q]], n);
    }
    if (dot == 0 && non_constant(f)) return make_certificate(f);
  }
}

std::optional<WidthCertificate> width_at_most_mitm(const CyclicSimplex& s, int w, Search search,
                                                   std::size_t max_half_entries) {
  require_target(w);
  const std::uint64_t n = s.volume();
  const Split split = split_coordinates(s, search, w, max_half_entries);
  const std::size_t left_len = split.left.coords.size();
  const std::size_t right_len = split.right.coords.size();

  auto by_value = [](const Entry& x, const Entry& y) { return x.value < y.value; };
  std::vector<Entry> left = tabulate(split.left, w, n);
  std::vector<Entry> right = tabulate(split.right, w, n);
  std::stable_sort(left.begin(), left.end(), by_value);
  std::stable_sort(right.begin(), right.end(), by_value);

  auto is_constant = [&](std::uint64_t li, std::uint64_t ri) {
    const std::int64_t tl = constant_digit(li, left_len, w);
    const std::int64_t tr = constant_digit(ri, right_len, w);
    if (tl == -1 || tr == -1) return false;
    std::int64_t t = tl >= 0 ? tl : tr;
    if (tl >= 0 && tr >= 0 && tl != tr) return false;
    if (search == Search::symmetric) return t == 0 || t == -2;
    return true;
  };

  constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
  std::pair<std::uint64_t, std::uint64_t> best{kNone, kNone};
  std::size_t i = 0, j = 0;
  while (i < left.size() && j < right.size()) {
    if (left[i].value < right[j].value) {
      ++i;
      continue;
    }
    if (right[j].value < left[i].value) {
      ++j;
      continue;
    }
    const std::uint64_t v = left[i].value;
    std::size_t i_end = i, j_end = j;
    while (i_end < left.size() && left[i_end].value == v) ++i_end;
    while (j_end < right.size() && right[j_end].value == v) ++j_end;
    // Groups are in index order; the first non-constant pair is the least.
    for (std::size_t a = i; a < i_end; ++a) {
      bool found = false;
      for (std::size_t c = j; c < j_end; ++c) {
        if (is_constant(left[a].index, right[c].index)) continue;
        best = std::min(best, std::pair{left[a].index, right[c].index});
        found = true;
        break;
      }
      if (found) break;
    }
    i = i_end;
    j = j_end;
  }
  if (best.first == kNone) return std::nullopt;

  std::vector<std::int64_t> f(s.generator().size(), 0);
  decode(best.first, split.left, w, f);
  decode(best.second, split.right, w, f);
  auto cert = make_certificate(std::move(f));
  if (!check_certificate(s, cert, w)) {
    throw Error(Errc::InternalCheck, "reconstructed functional failed verification")
        .with("N", std::to_string(n));
  }
  return cert;
}

bool width_at_most_exists(const CyclicSimplex& s, int w, Search search, std::size_t max_half_entries) {
  require_target(w);
  const std::uint64_t n = s.volume();
  const Split split = split_coordinates(s, search, w, max_half_entries);
  const auto left = value_counts(split.left, w, n, max_half_entries);
  const auto right = value_counts(split.right, w, n, max_half_entries);

  std::uint64_t left_sum = 0;
  for (std::uint64_t x : split.left.weights) left_sum = n == 1 ? 0 : add_mod(left_sum, x, n);

  // Constant functionals pairing up at value v; they never count.
  auto constants_at = [&](std::uint64_t v) -> std::uint64_t {
    if (search == Search::symmetric) return v == 0 ? 1 : 0;
    std::uint64_t count = 0;
    std::uint64_t value = 0;
    for (int t = 0; t <= w; ++t) {
      count += value == v;
      value = n == 1 ? 0 : add_mod(value, left_sum, n);
    }
    return count;
  };

  std::size_t i = 0, j = 0;
  while (i < left.size() && j < right.size()) {
    if (left[i].first < right[j].first) {
      ++i;
    } else if (right[j].first < left[i].first) {
      ++j;
    } else {
      const std::uint64_t pairs = left[i].second * right[j].second;
      if (pairs > constants_at(left[i].first)) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

WidthResult bounded_width(const CyclicSimplex& s, Search search, int cap, WidthMethod method,
                          bool want_certificate) {
  if (cap < 1) throw Error(Errc::BadParameters, "width cap must be >= 1");
  for (int w = 1; w <= cap; ++w) {
    if (method == WidthMethod::naive) {
      if (auto cert = width_at_most(s, w, search)) return {w, true, std::move(cert)};
    } else if (want_certificate) {
      if (auto cert = width_at_most_mitm(s, w, search)) return {w, true, std::move(cert)};
    } else if (width_at_most_exists(s, w, search)) {
      return {w, true, std::nullopt};
    }
  }
  return {cap, false, std::nullopt};
}

LatticeWidth lattice_width(const CyclicSimplex& s, Search search, std::optional<int> cap,
                           WidthMethod method) {
  if (cap) {
    auto r = bounded_width(s, search, *cap, method, true);
    if (!r.exact) {
      throw Error(Errc::AboveCap, "width exceeds cap")
          .with("N", std::to_string(s.volume()))
          .with("cap", std::to_string(*cap));
    }
    return {r.width, std::move(*r.certificate)};
  }
  for (int w = 1;; ++w) {
    auto cert = method == WidthMethod::naive ? width_at_most(s, w, search)
                                             : width_at_most_mitm(s, w, search);
    if (cert) return {w, std::move(*cert)};
  }
}

std::optional<WidthCertificate> embedded_width_at_most(std::span<const std::vector<std::int64_t>> vertices,
                                                       int w, Search search, std::uint64_t budget) {
  require_target(w);
  const std::size_t n = vertices.size();
  if (n < 2) throw Error(Errc::BadParameters, "need at least two vertices");
  for (const auto& v : vertices) {
    if (v.size() != n) throw Error(Errc::BadParameters, "each vertex needs one coordinate per vertex");
    std::int64_t sum = 0;
    for (std::int64_t x : v) sum += x;
    if (sum != 1) throw Error(Errc::BadParameters, "vertices must lie on the hyperplane sum(x) = 1");
  }
  const auto coords = free_coordinates(n, search);
  if (!cube_size(w, coords.size(), budget)) {
    throw Error(Errc::BudgetExceeded, "functional cube over budget")
        .with("w", std::to_string(w))
        .with("budget", std::to_string(budget));
  }

  // Values at the vertices: g = V^T f with V's columns the vertices.
  IntMatrix vt(n, std::vector<BigInt>(n));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) vt[c][r] = vertices[c][r];
  }
  const BigInt det = determinant(vt);
  if (det == 0) throw Error(Errc::DegenerateGenerator, "vertices are affinely dependent");
  const BigInt modulus = abs(det);
  if (modulus >= (BigInt(1) << 62)) {
    throw Error(Errc::BudgetExceeded, "determinant too large for the word-sized search")
        .with("det", to_decimal(det));
  }
  const auto d = static_cast<std::uint64_t>(modulus);

  // f = adj(V^T) g / det is integral iff every row of adj(V^T) kills g mod det.
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& row : adjugate(vt)) {
    std::vector<std::uint64_t> reduced;
    bool zero = true;
    for (const BigInt& x : row) {
      BigInt r = x % modulus;
      if (r < 0) r += modulus;
      reduced.push_back(static_cast<std::uint64_t>(r));
      zero = zero && r == 0;
    }
    if (!zero && std::find(rows.begin(), rows.end(), reduced) == rows.end()) rows.push_back(std::move(reduced));
  }

  std::vector<std::int64_t> g(n, 0);
  std::vector<std::uint64_t> residue(rows.size(), 0);
  std::vector<std::vector<std::uint64_t>> wrap(rows.size(), std::vector<std::uint64_t>(n));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) wrap[k][i] = mul_mod(static_cast<std::uint64_t>(w), rows[k][i], d);
  }
  for (;;) {
    std::size_t p = coords.size();
    while (p > 0 && g[coords[p - 1]] == w) --p;
    if (p == 0) return std::nullopt;
    const std::size_t c = coords[p - 1];
    ++g[c];
    for (std::size_t k = 0; k < rows.size(); ++k) residue[k] = add_mod(residue[k], rows[k][c], d);
    for (std::size_t q = p; q < coords.size(); ++q) {
      g[coords[q]] = 0;
      for (std::size_t k = 0; k < rows.size(); ++k) residue[k] = sub_mod(residue[k], wrap[k][coords[q]], d);
    }
    if (std::all_of(residue.begin(), residue.end(), [](std::uint64_t r) { return r == 0; }) && non_constant(g)) {
      return make_certificate(g);
    }
  }
}

}  // namespace cyclosimplex
