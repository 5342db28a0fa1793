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

#include "pathroid/spread.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace pathroid {
namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

int ceilDiv(int a, int b) { return (a + b - 1) / b; }

}  // namespace

bool LinearRelationGraph::isComplete() const {
  std::size_t m = vertices.size();
  return edges.size() == m * (m - 1) / 2;
}

bool LinearRelationGraph::hasEdge(std::size_t i, std::size_t j) const {
  auto key = std::make_pair(std::min(i, j), std::max(i, j));
  return std::binary_search(edges.begin(), edges.end(), key);
}

LinearRelationGraph linearRelationGraph(const MonomialIdeal& I) {
  if (I.isZero()) throw std::invalid_argument("linear relation graph of the zero ideal");
  if (!I.isEquigenerated()) {
    throw std::invalid_argument("linear relation graph needs an equigenerated ideal");
  }
  // x_i u_k = x_j u_l with i != j  iff  u_k / x_j = u_l / x_i.
  std::unordered_map<Monomial, std::vector<std::size_t>, MonomialHash> byQuotient;
  for (const Monomial& u : I.gens()) {
    for (std::size_t i : u.support()) byQuotient[u.overVariable(i)].push_back(i);
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto& [quotient, vars] : byQuotient) {
    for (std::size_t a = 0; a < vars.size(); ++a) {
      for (std::size_t b = a + 1; b < vars.size(); ++b) {
        if (vars[a] != vars[b]) {
          edges.emplace(std::min(vars[a], vars[b]), std::max(vars[a], vars[b]));
        }
      }
    }
  }
  LinearRelationGraph g;
  g.edges.assign(edges.begin(), edges.end());
  std::set<std::size_t> vertices;
  DisjointSets sets(I.ringDim());
  for (auto [i, j] : g.edges) {
    vertices.insert(i);
    vertices.insert(j);
    sets.join(i, j);
  }
  g.vertices.assign(vertices.begin(), vertices.end());
  std::set<std::size_t> roots;
  for (std::size_t v : g.vertices) roots.insert(sets.find(v));
  g.components = roots.size();
  return g;
}

int analyticSpread(const MonomialIdeal& I) {
  LinearRelationGraph g = linearRelationGraph(I);
  return static_cast<int>(g.vertexCount()) - static_cast<int>(g.components) + 1;
}

int limitDepthFormula(const MonomialIdeal& I) {
  return static_cast<int>(I.ringDim()) - analyticSpread(I);
}

bool DstabFormula::admits(int dstab) const {
  switch (kind) {
    case Kind::kExact:
      return dstab == value;
    case Kind::kBounds:
      return lo <= dstab && dstab <= hi;
    case Kind::kUncovered:
      return true;
  }
  return true;
}

std::string kindName(DstabFormula::Kind kind) {
  switch (kind) {
    case DstabFormula::Kind::kExact:
      return "exact";
    case DstabFormula::Kind::kBounds:
      return "bounds";
    case DstabFormula::Kind::kUncovered:
      return "uncovered";
  }
  return "uncovered";
}

DstabFormula closedFormDstab(const PartitionSpec& spec, int t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  const int n = spec.vertexCount();
  const int r = spec.blockCount();
  const int half = (t + 1) / 2;  // ceil(t/2)
  const int floorHalf = t / 2;
  const auto& sizes = spec.sizes();
  int feasible = 0;
  for (int s : sizes) feasible += std::min(s, half);
  if (t > n || feasible < t) throw std::invalid_argument("path ideal is zero");

  auto exact = [](int value, std::string regime) {
    DstabFormula f;
    f.kind = DstabFormula::Kind::kExact;
    f.value = value;
    f.regime = std::move(regime);
    return f;
  };
  auto bounds = [](int lo, int hi, std::string regime) {
    DstabFormula f;
    f.kind = DstabFormula::Kind::kBounds;
    f.lo = lo;
    f.hi = hi;
    f.regime = std::move(regime);
    return f;
  };

  if (t == n) return exact(1, "principal");
  bool allSmall = std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s <= half; });
  if (allSmall) return exact(ceilDiv(n - 1, n - t), "squarefree-veronese");

  if (r == 2) {
    for (int flip = 0; flip < 2; ++flip) {
      int p = sizes[flip], q = sizes[1 - flip];
      if (p == floorHalf && q > half) {
        return exact(ceilDiv(q - 1, q - half), "bipartite-ii");
      }
    }
    for (int flip = 0; flip < 2; ++flip) {
      int p = sizes[flip], q = sizes[1 - flip];
      if (p > floorHalf && q > half) {
        return t % 2 == 1 ? bounds(2, n - 1, "bipartite-iii-odd")
                          : bounds(1, n - 2, "bipartite-iii-even");
      }
    }
    return DstabFormula{};
  }

  if (t == 2) return exact(2, "edge-ideal-r3");
  if (t == 3 && n >= 5) return exact(2, "three-path-r3");
  bool allLarge = std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s >= half; });
  if (t >= 3 && allLarge) return bounds(2, n - 1, "large-blocks-r3");
  return DstabFormula{};
}

}  // namespace pathroid
