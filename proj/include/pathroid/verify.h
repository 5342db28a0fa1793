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

#ifndef PATHROID_VERIFY_H_
#define PATHROID_VERIFY_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pathroid/graph.h"
#include "pathroid/json_io.h"

namespace pathroid {

struct SweepFailure {
  std::string instance;  // replayable CLI invocation
  std::string expected;
  std::string actual;
};

struct SweepReport {
  std::string suiteName;
  std::size_t instancesChecked = 0;
  std::vector<SweepFailure> failures;
  // Instances not checked because the homology budget ran out.
  std::vector<std::string> skipped;
  // Observations that are flagged but do not fail the suite.
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

Json toJson(const SweepReport& r);

struct SweepOptions {
  int workers = 1;
  // Per-instance wall clock for homology computations; <= 0 is unlimited.
  double instanceBudgetSeconds = 0;
  // Test hook: may alter the path supports of an instance before checking.
  std::function<void(const PartitionSpec&, int t, std::vector<VertexSet>&)>
      mutateSupports;
  // Restrict a suite to one instance (used by replay descriptors).
  std::optional<PartitionSpec> onlySpec;
  std::optional<int> onlyT;
  std::optional<Json> onlyGraph;
  std::optional<std::vector<int>> onlyCounts;
};

// I_t(K_spec) satisfies the basis exchange property for every spec with
// sum <= maxN and every t >= 2 with I_t != 0.
SweepReport suitePathExchange(int maxN, const SweepOptions& opts = {});

// I_2(G) matroidal iff G is complete multipartite, over all labelled graphs
// with 2..maxVertices vertices and no isolated vertex.
SweepReport suiteEdgeIdealMatroidality(int maxVertices, const SweepOptions& opts = {});

// CM criterion (n_i <= ceil(t/2)) versus principal / squarefree Veronese
// recognition of the constructed ideal.
SweepReport suiteCohenMacaulay(int maxN, const SweepOptions& opts = {});

// arrange succeeds iff the largest count is <= ceil(t/2), and every success
// is valid, over count vectors with <= maxColours parts and total <= maxT.
SweepReport suiteArrangement(int maxColours, int maxT, const SweepOptions& opts = {});

// K_{p,q}: closed-form depths for p = floor(t/2) < ... and bounds otherwise.
SweepReport suiteBipartiteDepth(int maxN, const SweepOptions& opts = {});

// All blocks <= ceil(t/2), t < n: dstab = ceil((n-1)/(n-t)), limit depth 0.
SweepReport suiteSquarefreeVeroneseDepth(int maxN, const SweepOptions& opts = {});

// r >= 3: t = 3 and t = 2 square to depth 0 with dstab 2; all blocks >=
// ceil(t/2) give a complete Γ on n vertices and 1 < dstab < n.
SweepReport suiteManyBlockDepth(int maxN, const SweepOptions& opts = {});

// dstab < m - s + 1 and limit depth = n - (m - s + 1) from the engine.
SweepReport suiteSpreadEquations(int maxN, const SweepOptions& opts = {});

// Fiber chains of path ideals, their pairwise products and squares; the
// I_{1,i} properties on fully supported gcd-1 matroidal path ideals.
SweepReport suiteFiberChain(int maxN, const SweepOptions& opts = {});

// Koszul depth vs Stanley-Reisner depth, Koszul totals vs Taylor totals,
// strong persistence I^{k+1} : I = I^k.
SweepReport suiteOracles(int maxN, const SweepOptions& opts = {});

struct SixVertexSearch {
  // Graphs whose I_3 equals the listed generators.
  std::vector<SimpleGraph> i3Matches;
  // Those whose I_4 also has u = x1x2x3x4 and v = x3x4x5x6 as generators.
  std::vector<SimpleGraph> withPair;
  // Those for which x5 u / x1 and x6 u / x1 are not generators of I_4
  // either, i.e. graphs consistent with every stated fact of the example.
  std::vector<SimpleGraph> hits;
};

// The ten generators of I_3 in the 6-vertex example.
MonomialIdeal sixVertexThreePathIdeal();
SixVertexSearch reconstructSixVertexGraph();
SweepReport suiteSixVertexExample(const SweepOptions& opts = {});

std::vector<std::string> suiteNames();
// Runs a suite by name with its default bounds; throws on unknown names.
SweepReport runSuite(const std::string& name, const SweepOptions& opts = {});

}  // namespace pathroid

#endif  // PATHROID_VERIFY_H_
