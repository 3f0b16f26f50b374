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

#pragma once

#include <cstdint>
#include <vector>

#include "reppack/instance.hpp"

namespace reppack {

struct GeneratorSpec {
  std::uint64_t seed = 0;
  ProblemKind kind = ProblemKind::wdm;
  int q = 3;
  int p = 2;
  // One size per coordinate for matching instances, a single size for
  // packing instances.
  std::vector<int> universe_sizes;
  Weight weight_lo = 1;
  Weight weight_hi = 1;
};

// `m` distinct members drawn uniformly, weights uniform in
// [weight_lo, weight_hi]. Elements never drawn are dropped. Throws
// InstanceError when fewer than `m` distinct members exist.
Instance gen_random(const GeneratorSpec& spec, std::size_t m);

struct PlantedInstance {
  Instance instance;
  Weight planted_weight = 0;
};

// p disjoint members plus `m_extra` random distinct ones, shuffled
// together. planted_weight is a lower bound on the optimum.
PlantedInstance gen_planted(const GeneratorSpec& spec, std::size_t m_extra);

}  // namespace reppack
