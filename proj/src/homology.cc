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

#include "pathroid/homology.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "pathroid/rank.h"

namespace pathroid {

SimplicialComplex SimplicialComplex::fromFacets(VertexSet vertexLabels,
                                                std::vector<VertexSet> facets) {
  SimplicialComplex k(vertexLabels);
  for (VertexSet f : facets) {
    if ((f & ~vertexLabels) != 0) {
      throw std::invalid_argument("facet uses a vertex outside the labels");
    }
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (VertexSet f : facets) {
    bool maximal = std::none_of(facets.begin(), facets.end(), [&](VertexSet g) {
      return g != f && (f & ~g) == 0;
    });
    if (maximal) k.facets_.push_back(f);
  }
  return k;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](VertexSet f) { return (face & ~f) == 0; });
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<VertexSet> all;
  for (VertexSet f : facets_) {
    // Enumerate all subsets of f.
    VertexSet s = f;
    while (true) {
      all.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::vector<VertexSet> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    int ca = cardinality(a), cb = cardinality(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

SimplicialComplex SimplicialComplex::restrictTo(VertexSet subset) const {
  if (isVoid()) return SimplicialComplex(vertex_labels_ & subset);
  std::vector<VertexSet> restricted;
  for (VertexSet f : facets_) restricted.push_back(f & subset);
  return fromFacets(vertex_labels_ & subset, std::move(restricted));
}

std::vector<std::size_t> SimplicialComplex::reducedHomology() const {
  if (isVoid()) return {};
  return reducedHomologyOfFaces(faces());
}

std::vector<std::size_t> reducedHomologyOfFaces(const std::vector<VertexSet>& faces) {
  if (faces.empty()) return {};
  int top = 0;
  for (VertexSet f : faces) top = std::max(top, cardinality(f));
  std::vector<std::vector<VertexSet>> bySize(top + 1);
  for (VertexSet f : faces) bySize[cardinality(f)].push_back(f);

  // boundaryRank[c] = rank of the boundary C_c -> C_{c-1}, c >= 1.
  std::vector<std::size_t> boundaryRank(top + 2, 0);
  for (int c = 1; c <= top; ++c) {
    const auto& lower = bySize[c - 1];
    const auto& upper = bySize[c];
    if (lower.empty() || upper.empty()) continue;
    std::unordered_map<VertexSet, std::size_t> index;
    for (std::size_t k = 0; k < lower.size(); ++k) index.emplace(lower[k], k);
    IntMatrix m(lower.size(), upper.size());
    for (std::size_t col = 0; col < upper.size(); ++col) {
      VertexSet f = upper[col];
      int position = 0;
      for (VertexSet rest = f; rest != 0; rest &= rest - 1, ++position) {
        VertexSet bit = rest & -rest;
        auto it = index.find(f & ~bit);
        if (it == index.end()) {
          throw std::invalid_argument("face family is not closed under subsets");
        }
        m.at(it->second, col) = (position % 2 == 0) ? 1 : -1;
      }
    }
    boundaryRank[c] = rationalRank(m);
  }
  std::vector<std::size_t> homology(top + 1, 0);
  for (int c = 0; c <= top; ++c) {
    homology[c] = bySize[c].size() - boundaryRank[c] - boundaryRank[c + 1];
  }
  return homology;
}

}  // namespace pathroid
