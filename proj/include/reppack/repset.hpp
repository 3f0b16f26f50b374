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

// Max r-representative families over the uniform matroid.
//
// An s-set X is embedded as the vector of all s x s minors of its columns
// in a (s+r) x |U| Vandermonde matrix over a prime field. For any Y with
// |Y| <= r, "X avoids Y" is a nonzero linear functional of that vector, so
// a max-weight basis of the embedded family serves every Y at least as
// well as the full family does. The basis has at most C(s+r, s) members.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "reppack/instance.hpp"

namespace reppack {

// Partial solution carried by a triple. When `prefix` is nonzero the last
// member is only partially placed: its first `prefix` elements count.
struct Payload {
  std::vector<MemberIndex> members;
  int prefix = 0;

  bool operator==(const Payload&) const = default;
};

struct Triple {
  ElementSet x;
  Payload payload;
  Weight weight = 0;

  bool operator==(const Triple&) const = default;
};

struct RepQuery {
  std::size_t universe_size = 0;
  int s = 0;
  int r = 0;
};

// Saturates at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

std::uint32_t smallest_prime_at_least(std::uint64_t n);

using FieldValue = std::uint32_t;

class FieldMatrixContext {
 public:
  // Throws std::invalid_argument for negative s or r, or a rank above 62.
  FieldMatrixContext(std::size_t universe_size, int s, int r);

  std::uint32_t prime() const { return prime_; }
  int s() const { return s_; }
  int rank() const { return s_ + r_; }
  std::size_t dimension() const { return dimension_; }
  FieldValue node(ElementId u) const;

  // Coordinates follow the s-subsets of rows {0..s+r-1} in colex order;
  // each holds det(rows J, columns x). Throws std::invalid_argument
  // unless x is strictly ascending, in range and of size s.
  std::vector<FieldValue> minor_vector(std::span<const ElementId> x) const;

  FieldValue mul(FieldValue a, FieldValue b) const;
  FieldValue sub(FieldValue a, FieldValue b) const;
  FieldValue inverse(FieldValue a) const;

 private:
  std::size_t universe_size_;
  int s_;
  int r_;
  std::uint32_t prime_;
  std::size_t dimension_;
  std::vector<std::uint64_t> row_subsets_;
};

// Row-echelon store of kept vectors; insertion reports independence.
class SpanBasis {
 public:
  explicit SpanBasis(const FieldMatrixContext& ctx);

  // Adds v when it is independent of the stored rows.
  bool insert(std::vector<FieldValue> v);
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == ctx_->dimension(); }

 private:
  const FieldMatrixContext* ctx_;
  std::vector<std::vector<FieldValue>> rows_;
  std::vector<std::size_t> pivots_;
};

// Positions of the kept triples, ascending. Triples are scanned by weight
// descending, then position ascending; a triple is kept when its minor
// vector is independent of those kept before it.
std::vector<std::size_t> representative_positions(const RepQuery& query,
                                                  std::span<const Triple> family);

// Subfamily of `family` (original order) that max r-represents it, with
// at most C(s+r, s) triples. Throws std::invalid_argument when a triple
// has |x| != s.
std::vector<Triple> represent(const RepQuery& query, std::vector<Triple> family);

}  // namespace reppack
