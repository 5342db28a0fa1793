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

#include "pathroid/exchange.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace pathroid {

SetSystem::SetSystem(int groundSize, std::vector<VertexSet> bases)
    : ground_size_(groundSize), bases_(std::move(bases)) {
  if (groundSize < 0 || groundSize > static_cast<int>(kMaxGraphVertices)) {
    throw std::invalid_argument("ground set size out of range");
  }
  if (bases_.empty()) throw std::invalid_argument("empty set system");
  VertexSet ground = groundSize == 64 ? ~VertexSet{0}
                                      : (VertexSet{1} << groundSize) - 1;
  int r = cardinality(bases_.front());
  for (VertexSet b : bases_) {
    if ((b & ~ground) != 0) throw std::invalid_argument("base leaves the ground set");
    if (cardinality(b) != r) throw std::invalid_argument("bases are not equicardinal");
  }
  std::sort(bases_.begin(), bases_.end(),
            [](VertexSet a, VertexSet b) { return members(a) < members(b); });
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
}

ExchangeVerdict<VertexSet> checkBasisExchange(const SetSystem& s) {
  std::unordered_set<VertexSet> lookup(s.bases().begin(), s.bases().end());
  for (VertexSet a : s.bases()) {
    for (VertexSet b : s.bases()) {
      VertexSet removable = a & ~b;
      VertexSet candidates = b & ~a;
      while (removable != 0) {
        int x = __builtin_ctzll(removable);
        removable &= removable - 1;
        VertexSet rest = a & ~(VertexSet{1} << x);
        bool found = false;
        for (VertexSet c = candidates; c != 0 && !found; c &= c - 1) {
          found = lookup.count(rest | (c & -c)) != 0;
        }
        if (!found) {
          return {false, ExchangeWitness<VertexSet>{a, b, static_cast<std::size_t>(x)}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

bool hasPartner(const std::unordered_set<Monomial, MonomialHash>& lookup,
                const Monomial& u, const Monomial& v, std::size_t i) {
  Monomial reduced = u.overVariable(i);
  for (std::size_t j = 0; j < u.dim(); ++j) {
    if (u[j] < v[j] && lookup.count(reduced.timesVariable(j)) != 0) return true;
  }
  return false;
}

}  // namespace

ExchangeVerdict<Monomial> checkPolymatroidalExchange(const MonomialIdeal& I) {
  if (I.isZero()) throw std::invalid_argument("exchange check on the zero ideal");
  if (!I.isEquigenerated()) {
    throw std::invalid_argument("exchange check needs an equigenerated ideal");
  }
  std::unordered_set<Monomial, MonomialHash> lookup(I.gens().begin(), I.gens().end());
  for (const Monomial& u : I.gens()) {
    for (const Monomial& v : I.gens()) {
      for (std::size_t i = 0; i < u.dim(); ++i) {
        if (u[i] > v[i] && !hasPartner(lookup, u, v, i)) {
          return {false, ExchangeWitness<Monomial>{u, v, i}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

bool exchangeFailsAt(const MonomialIdeal& I, const Monomial& u,
                     const Monomial& v, std::size_t i) {
  if (!I.isGenerator(u) || !I.isGenerator(v) || i >= u.dim() || u[i] <= v[i]) {
    return false;
  }
  std::unordered_set<Monomial, MonomialHash> lookup(I.gens().begin(), I.gens().end());
  return !hasPartner(lookup, u, v, i);
}

EdgeIdealMatroidality isMatroidalEdgeIdeal(const SimpleGraph& g) {
  if (g.edgeCount() == 0) throw std::invalid_argument("edgeless graph");
  std::vector<int> keep;
  for (int v = 0; v < static_cast<int>(g.vertexCount()); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  SimpleGraph stripped = g.induced(keep);
  EdgeIdealMatroidality out;
  out.matroidal = checkPolymatroidalExchange(pathIdeal(stripped, 2)).holds;
  if (!out.matroidal) return out;

  std::vector<std::vector<int>> blocks;
  std::vector<int> sizes;
  for (const auto& cls : neighbourhoodClasses(stripped)) {
    std::vector<int> original;
    for (int v : cls) original.push_back(keep[v]);
    sizes.push_back(static_cast<int>(original.size()));
    blocks.push_back(std::move(original));
  }
  out.blocks = std::move(blocks);
  out.partition = PartitionSpec(std::move(sizes));
  return out;
}

}  // namespace pathroid
