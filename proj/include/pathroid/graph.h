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

#ifndef PATHROID_GRAPH_H_
#define PATHROID_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathroid/monomial_ideal.h"

namespace pathroid {

// Vertex subset as a bit mask: vertex v (0-based) is bit v.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxGraphVertices = 64;

inline int cardinality(VertexSet s) { return __builtin_popcountll(s); }
std::vector<int> members(VertexSet s);
// "{1,3,4}" with 1-based labels.
std::string formatVertexSet(VertexSet s);

class SimpleGraph {
 public:
  // Edges use 0-based vertex indices. Throws std::invalid_argument on loops,
  // duplicate edges or out-of-range endpoints.
  SimpleGraph(std::size_t vertexCount,
              const std::vector<std::pair<int, int>>& edges);

  std::size_t vertexCount() const { return adjacency_.size(); }
  std::size_t edgeCount() const { return edges_.size(); }
  // Sorted (i < j) pairs.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int i, int j) const { return (adjacency_[i] >> j) & 1u; }
  VertexSet neighbours(int i) const { return adjacency_[i]; }
  int degree(int i) const { return cardinality(adjacency_[i]); }
  std::vector<int> isolatedVertices() const;

  // Induced subgraph on `keep`, relabelled in increasing order.
  SimpleGraph induced(const std::vector<int>& keep) const;

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<std::pair<int, int>> edges_;
};

// Block sizes (n_1, ..., n_r) of a complete multipartite graph; block i is
// the consecutive vertex range starting at n_1 + ... + n_{i-1}.
class PartitionSpec {
 public:
  explicit PartitionSpec(std::vector<int> sizes);
  // "1,2,3".
  static PartitionSpec parse(std::string_view text);

  const std::vector<int>& sizes() const { return sizes_; }
  int blockCount() const { return static_cast<int>(sizes_.size()); }
  int vertexCount() const { return total_; }
  int blockOf(int vertex) const;
  VertexSet blockMask(int block) const;
  std::string toString() const;

  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;

 private:
  std::vector<int> sizes_;
  int total_ = 0;
};

// Supports of all t-paths of a graph, each reported once, sorted by their
// increasing element lists.
struct PathSet {
  int t = 0;
  std::vector<VertexSet> vertexSets;

  bool containsSet(VertexSet s) const;
};

SimpleGraph completeMultipartite(const PartitionSpec& spec);
SimpleGraph completeGraph(int n);
PathSet enumerateTPaths(const SimpleGraph& g, int t);
MonomialIdeal squarefreeIdeal(std::size_t ringDim,
                              const std::vector<VertexSet>& supports);
MonomialIdeal pathIdeal(const SimpleGraph& g, int t);
MonomialIdeal pathIdeal(const PartitionSpec& spec, int t);
int maxBlockIntersection(const PartitionSpec& spec, VertexSet a);

// Classes of vertices with equal open neighbourhoods, ordered by their
// smallest vertex.
std::vector<std::vector<int>> neighbourhoodClasses(const SimpleGraph& g);
// Decides structurally whether g is complete r-partite (r >= 2) with the
// neighbourhood classes as blocks; returns the blocks when it is.
std::optional<std::vector<std::vector<int>>> completeMultipartiteBlocks(
    const SimpleGraph& g);

// Non-decreasing block-size sequences with r >= 2 and 2 <= sum <= maxN,
// ordered by total then lexicographically.
std::vector<PartitionSpec> partitionsUpTo(int maxN);

}  // namespace pathroid

#endif  // PATHROID_GRAPH_H_
