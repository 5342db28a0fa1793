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

#include "pathroid/graph.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace pathroid {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(__builtin_ctzll(s));
    s &= s - 1;
  }
  return out;
}

std::string formatVertexSet(VertexSet s) {
  std::string out = "{";
  for (int v : members(s)) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v + 1);
  }
  return out + "}";
}

SimpleGraph::SimpleGraph(std::size_t vertexCount,
                         const std::vector<std::pair<int, int>>& edges) {
  if (vertexCount == 0) throw std::invalid_argument("graph needs a vertex");
  if (vertexCount > kMaxGraphVertices) {
    throw std::invalid_argument("graph exceeds 64 vertices");
  }
  adjacency_.assign(vertexCount, 0);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= static_cast<int>(vertexCount) ||
        b >= static_cast<int>(vertexCount)) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (a == b) throw std::invalid_argument("loops are not allowed");
    if (adjacent(a, b)) throw std::invalid_argument("duplicate edge");
    adjacency_[a] |= VertexSet{1} << b;
    adjacency_[b] |= VertexSet{1} << a;
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
}

std::vector<int> SimpleGraph::isolatedVertices() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    if (adjacency_[v] == 0) out.push_back(static_cast<int>(v));
  }
  return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& keep) const {
  std::vector<int> relabel(vertexCount(), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) relabel[keep[k]] = static_cast<int>(k);
  std::vector<std::pair<int, int>> kept;
  for (auto [a, b] : edges_) {
    if (relabel[a] >= 0 && relabel[b] >= 0) kept.emplace_back(relabel[a], relabel[b]);
  }
  return SimpleGraph(keep.size(), kept);
}

PartitionSpec::PartitionSpec(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.size() < 2) {
    throw std::invalid_argument("a complete multipartite graph needs at least 2 blocks");
  }
  for (int s : sizes_) {
    if (s < 1) throw std::invalid_argument("block sizes must be positive");
    total_ += s;
  }
  if (total_ > static_cast<int>(kMaxGraphVertices)) {
    throw std::invalid_argument("partition exceeds 64 vertices");
  }
}

PartitionSpec PartitionSpec::parse(std::string_view text) {
  std::vector<int> sizes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || end != field.data() + field.size() || field.empty()) {
      throw std::invalid_argument("bad partition entry '" + std::string(field) + "'");
    }
    sizes.push_back(value);
    pos = comma + 1;
  }
  return PartitionSpec(std::move(sizes));
}

int PartitionSpec::blockOf(int vertex) const {
  int start = 0;
  for (int b = 0; b < blockCount(); ++b) {
    if (vertex < start + sizes_[b]) return b;
    start += sizes_[b];
  }
  throw std::out_of_range("vertex outside partition");
}

VertexSet PartitionSpec::blockMask(int block) const {
  int start = 0;
  for (int b = 0; b < block; ++b) start += sizes_[b];
  VertexSet ones = sizes_[block] == 64 ? ~VertexSet{0}
                                       : (VertexSet{1} << sizes_[block]) - 1;
  return ones << start;
}

std::string PartitionSpec::toString() const {
  std::string out;
  for (int s : sizes_) {
    if (!out.empty()) out += ',';
    out += std::to_string(s);
  }
  return out;
}

bool PathSet::containsSet(VertexSet s) const {
  return std::find(vertexSets.begin(), vertexSets.end(), s) != vertexSets.end();
}

SimpleGraph completeMultipartite(const PartitionSpec& spec) {
  std::vector<std::pair<int, int>> edges;
  int n = spec.vertexCount();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (spec.blockOf(a) != spec.blockOf(b)) edges.emplace_back(a, b);
    }
  }
  return SimpleGraph(n, edges);
}

SimpleGraph completeGraph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return SimpleGraph(n, edges);
}

PathSet enumerateTPaths(const SimpleGraph& g, int t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  PathSet out{t, {}};
  const int n = static_cast<int>(g.vertexCount());
  if (t > n) return out;

  // A simple path is grown from its tail only; starting at every vertex
  // reaches every path. States (vertex set, tail) are deduplicated per layer.
  struct State {
    VertexSet set;
    int tail;
    bool operator==(const State&) const = default;
  };
  struct StateHash {
    std::size_t operator()(const State& s) const noexcept {
      return std::hash<VertexSet>()(s.set) * 131 + static_cast<std::size_t>(s.tail);
    }
  };
  std::vector<State> layer;
  for (int v = 0; v < n; ++v) layer.push_back({VertexSet{1} << v, v});
  for (int size = 1; size < t; ++size) {
    std::unordered_set<State, StateHash> next;
    for (const State& s : layer) {
      VertexSet open = g.neighbours(s.tail) & ~s.set;
      while (open != 0) {
        int w = __builtin_ctzll(open);
        open &= open - 1;
        next.insert({s.set | (VertexSet{1} << w), w});
      }
    }
    layer.assign(next.begin(), next.end());
  }
  std::unordered_set<VertexSet> supports;
  for (const State& s : layer) supports.insert(s.set);
  out.vertexSets.assign(supports.begin(), supports.end());
  std::sort(out.vertexSets.begin(), out.vertexSets.end(),
            [](VertexSet a, VertexSet b) { return members(a) < members(b); });
  return out;
}

MonomialIdeal squarefreeIdeal(std::size_t ringDim,
                              const std::vector<VertexSet>& supports) {
  std::vector<Monomial> gens;
  gens.reserve(supports.size());
  for (VertexSet s : supports) gens.push_back(Monomial::squarefree(ringDim, s));
  return MonomialIdeal::minimalize(std::move(gens), ringDim);
}

MonomialIdeal pathIdeal(const SimpleGraph& g, int t) {
  return squarefreeIdeal(g.vertexCount(), enumerateTPaths(g, t).vertexSets);
}

MonomialIdeal pathIdeal(const PartitionSpec& spec, int t) {
  return pathIdeal(completeMultipartite(spec), t);
}

int maxBlockIntersection(const PartitionSpec& spec, VertexSet a) {
  int best = 0;
  for (int b = 0; b < spec.blockCount(); ++b) {
    best = std::max(best, cardinality(a & spec.blockMask(b)));
  }
  return best;
}

std::vector<std::vector<int>> neighbourhoodClasses(const SimpleGraph& g) {
  std::map<VertexSet, std::size_t> classOf;
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < static_cast<int>(g.vertexCount()); ++v) {
    auto [it, inserted] = classOf.try_emplace(g.neighbours(v), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

std::optional<std::vector<std::vector<int>>> completeMultipartiteBlocks(
    const SimpleGraph& g) {
  auto classes = neighbourhoodClasses(g);
  if (classes.size() < 2) return std::nullopt;
  std::vector<int> blockOf(g.vertexCount());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int v : classes[c]) blockOf[v] = static_cast<int>(c);
  }
  for (int a = 0; a < static_cast<int>(g.vertexCount()); ++a) {
    for (int b = a + 1; b < static_cast<int>(g.vertexCount()); ++b) {
      if (g.adjacent(a, b) != (blockOf[a] != blockOf[b])) return std::nullopt;
    }
  }
  return classes;
}

std::vector<PartitionSpec> partitionsUpTo(int maxN) {
  std::vector<PartitionSpec> out;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int minPart) {
    if (current.size() >= 2 && remaining == 0) out.emplace_back(current);
    for (int p = minPart; p <= remaining; ++p) {
      current.push_back(p);
      extend(remaining - p, p);
      current.pop_back();
    }
  };
  for (int n = 2; n <= maxN; ++n) extend(n, 1);
  return out;
}

}  // namespace pathroid
