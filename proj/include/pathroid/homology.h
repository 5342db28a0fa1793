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

#ifndef PATHROID_HOMOLOGY_H_
#define PATHROID_HOMOLOGY_H_

#include <cstddef>
#include <vector>

#include "pathroid/graph.h"

namespace pathroid {

// A finite simplicial complex whose faces are vertex sets (bit masks). The
// void complex has no faces; the empty complex {∅} has only the empty face.
class SimplicialComplex {
 public:
  // The void complex on `vertexLabels`.
  explicit SimplicialComplex(VertexSet vertexLabels = 0)
      : vertex_labels_(vertexLabels) {}
  // Downward closure of `facets`; every facet must lie in `vertexLabels`.
  static SimplicialComplex fromFacets(VertexSet vertexLabels,
                                      std::vector<VertexSet> facets);

  VertexSet vertexLabels() const { return vertex_labels_; }
  // Inclusion-maximal faces, sorted.
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool isVoid() const { return facets_.empty(); }
  bool contains(VertexSet face) const;
  // All faces, ordered by size then by mask.
  std::vector<VertexSet> faces() const;
  // Restriction to the faces inside `subset`.
  SimplicialComplex restrictTo(VertexSet subset) const;

  // Entry c is the rank of reduced homology in dimension c - 1 over the
  // rationals (entry 0 is H̃_{-1}). Empty for the void complex.
  std::vector<std::size_t> reducedHomology() const;

 private:
  VertexSet vertex_labels_;
  std::vector<VertexSet> facets_;
};

// Reduced homology ranks of the complex consisting of exactly `faces`, which
// must be closed under taking subsets (not checked). Same indexing as above.
std::vector<std::size_t> reducedHomologyOfFaces(const std::vector<VertexSet>& faces);

}  // namespace pathroid

#endif  // PATHROID_HOMOLOGY_H_
