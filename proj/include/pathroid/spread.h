// Copyright 2026 The Authors.
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

#ifndef PATHROID_SPREAD_H_
#define PATHROID_SPREAD_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pathroid/graph.h"
#include "pathroid/monomial_ideal.h"

namespace pathroid {

// Γ(I): variables i, j joined when x_i u_k = x_j u_l for generators u_k, u_l.
struct LinearRelationGraph {
  std::vector<std::size_t> vertices;                        // sorted, 0-based
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted, i < j
  std::size_t components = 0;

  std::size_t vertexCount() const { return vertices.size(); }
  // Complete on its vertex set.
  bool isComplete() const;
  bool hasEdge(std::size_t i, std::size_t j) const;
};

// Groups generators by the quotients u / x_i; throws for the zero ideal or a
// non-equigenerated ideal.
LinearRelationGraph linearRelationGraph(const MonomialIdeal& I);

// ℓ(I) = m - s + 1. Meaningful for polymatroidal I; the caller asserts it.
int analyticSpread(const MonomialIdeal& I);

// n - ℓ(I): the limit of depth(S/I^k) for polymatroidal I.
int limitDepthFormula(const MonomialIdeal& I);

// Closed-form index of depth stability of I_t(K_spec), where known.
struct DstabFormula {
  enum class Kind { kExact, kBounds, kUncovered };
  Kind kind = Kind::kUncovered;
  int value = 0;  // kExact
  int lo = 0;     // kBounds, inclusive
  int hi = 0;     // kBounds, inclusive
  std::string regime;

  bool admits(int dstab) const;
};

std::string kindName(DstabFormula::Kind kind);

// Regimes are matched exactly as their hypotheses are stated; no
// extrapolation. Requires I_t(K_spec) != 0 and t >= 2.
DstabFormula closedFormDstab(const PartitionSpec& spec, int t);

}  // namespace pathroid

#endif  // PATHROID_SPREAD_H_
