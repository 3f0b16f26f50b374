// Copyright 2026 The reppack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reppack/repset.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace reppack {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // c * (n - k + i) / i, exact at every step; divide first where possible.
    const std::uint64_t g = std::gcd(c, i);
    const std::uint64_t num = n - k + i;
    const std::uint64_t c_red = c / g;
    const std::uint64_t i_red = i / g;
    const std::uint64_t num_red = num / i_red;
    if (num_red != 0 && c_red > kMax / num_red) return kMax;
    c = c_red * num_red;
  }
  return c;
}

std::uint32_t smallest_prime_at_least(std::uint64_t n) {
  if (n > std::numeric_limits<std::uint32_t>::max() - 1000) {
    throw std::invalid_argument("universe too large for a 32-bit prime field");
  }
  auto is_prime = [](std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d) {
      if (x % d == 0) return false;
    }
    return true;
  };
  std::uint64_t x = std::max<std::uint64_t>(n, 2);
  while (!is_prime(x)) ++x;
  return static_cast<std::uint32_t>(x);
}

FieldMatrixContext::FieldMatrixContext(std::size_t universe_size, int s, int r)
    : universe_size_(universe_size), s_(s), r_(r) {
  if (s < 0 || r < 0) throw std::invalid_argument("s and r must be non-negative");
  if (s + r > 62) throw std::invalid_argument("rank s + r above 62 is not supported");
  prime_ = smallest_prime_at_least(std::max<std::size_t>(universe_size, 2));
  const int k = s + r;
  // Masks with popcount s in increasing numeric order enumerate the row
  // subsets colexicographically.
  if (s == 0) {
    row_subsets_.push_back(0);
  } else if (s <= k) {
    std::uint64_t m = (std::uint64_t{1} << s) - 1;
    const std::uint64_t end = std::uint64_t{1} << k;
    while (m < end) {
      row_subsets_.push_back(m);
      const std::uint64_t low = m & (~m + 1);
      const std::uint64_t ripple = m + low;
      m = ripple | (((m ^ ripple) >> 2) / low);
    }
  }
  dimension_ = row_subsets_.size();
}

FieldValue FieldMatrixContext::node(ElementId u) const {
  if (u >= universe_size_) throw std::invalid_argument("element id out of range");
  return static_cast<FieldValue>(u);
}

FieldValue FieldMatrixContext::mul(FieldValue a, FieldValue b) const {
  return static_cast<FieldValue>(std::uint64_t{a} * b % prime_);
}

FieldValue FieldMatrixContext::sub(FieldValue a, FieldValue b) const {
  return a >= b ? a - b : a + (prime_ - b);
}

FieldValue FieldMatrixContext::inverse(FieldValue a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = prime_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % prime_;
    base = base * base % prime_;
    e >>= 1;
  }
  return static_cast<FieldValue>(result);
}

std::vector<FieldValue> FieldMatrixContext::minor_vector(std::span<const ElementId> x) const {
  if (static_cast<int>(x.size()) != s_) {
    throw std::invalid_argument("expected a set of size " + std::to_string(s_) + ", got " +
                                std::to_string(x.size()));
  }
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c] >= universe_size_) throw std::invalid_argument("element id out of range");
    if (c > 0 && x[c - 1] >= x[c]) throw std::invalid_argument("set is not strictly ascending");
  }
  const int k = rank();
  const std::size_t s = x.size();

  // powers[c * k + i] = node(x[c])^i
  std::vector<FieldValue> powers(s * k);
  for (std::size_t c = 0; c < s; ++c) {
    FieldValue v = 1 % prime_;
    for (int i = 0; i < k; ++i) {
      powers[c * k + i] = v;
      v = mul(v, node(x[c]));
    }
  }

  std::vector<FieldValue> out;
  out.reserve(dimension_);
  std::vector<FieldValue> a(s * s);
  std::vector<int> rows(s);
  for (std::uint64_t mask : row_subsets_) {
    std::size_t n = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) rows[n++] = std::countr_zero(m);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t c = 0; c < s; ++c) a[i * s + c] = powers[c * k + rows[i]];
    }
    // det by elimination
    FieldValue det = 1;
    for (std::size_t col = 0; col < s && det != 0; ++col) {
      std::size_t piv = col;
      while (piv < s && a[piv * s + col] == 0) ++piv;
      if (piv == s) {
        det = 0;
        break;
      }
      if (piv != col) {
        for (std::size_t c = 0; c < s; ++c) std::swap(a[piv * s + c], a[col * s + c]);
        det = sub(0, det);
      }
      det = mul(det, a[col * s + col]);
      const FieldValue inv = inverse(a[col * s + col]);
      for (std::size_t i = col + 1; i < s; ++i) {
        if (a[i * s + col] == 0) continue;
        const FieldValue f = mul(a[i * s + col], inv);
        for (std::size_t c = col; c < s; ++c) {
          a[i * s + c] = sub(a[i * s + c], mul(f, a[col * s + c]));
        }
      }
    }
    out.push_back(det);
  }
  return out;
}

SpanBasis::SpanBasis(const FieldMatrixContext& ctx) : ctx_(&ctx) {}

bool SpanBasis::insert(std::vector<FieldValue> v) {
  if (v.size() != ctx_->dimension()) throw std::invalid_argument("vector dimension mismatch");
  // Each stored row is zero on the pivots of the rows before it, so one
  // pass in insertion order clears every pivot of v.
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    const FieldValue f = v[pivots_[t]];
    if (f == 0) continue;
    const auto& row = rows_[t];
    for (std::size_t c = pivots_[t]; c < v.size(); ++c) {
      if (row[c] != 0) v[c] = ctx_->sub(v[c], ctx_->mul(f, row[c]));
    }
  }
  auto nz = std::find_if(v.begin(), v.end(), [](FieldValue x) { return x != 0; });
  if (nz == v.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(nz - v.begin());
  const FieldValue inv = ctx_->inverse(v[pivot]);
  for (std::size_t c = pivot; c < v.size(); ++c) v[c] = ctx_->mul(v[c], inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

std::vector<std::size_t> representative_positions(const RepQuery& query,
                                                  std::span<const Triple> family) {
  for (const auto& t : family) {
    if (static_cast<int>(t.x.size()) != query.s) {
      throw std::invalid_argument("triple of size " + std::to_string(t.x.size()) +
                                  " in a family of " + std::to_string(query.s) + "-sets");
    }
  }
  if (family.empty()) return {};

  std::vector<std::size_t> order(family.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return family[a].weight > family[b].weight;
  });

  const FieldMatrixContext ctx(query.universe_size, query.s, query.r);
  SpanBasis basis(ctx);
  std::vector<std::size_t> kept;
  for (std::size_t pos : order) {
    if (basis.full()) break;
    if (basis.insert(ctx.minor_vector(family[pos].x))) kept.push_back(pos);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Triple> represent(const RepQuery& query, std::vector<Triple> family) {
  const auto kept = representative_positions(query, family);
  std::vector<Triple> out;
  out.reserve(kept.size());
  for (std::size_t pos : kept) out.push_back(std::move(family[pos]));
  return out;
}

}  // namespace reppack
