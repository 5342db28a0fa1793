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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles_util.h"
#include "pathroid/cm.h"
#include "pathroid/exchange.h"
#include "pathroid/json_io.h"
#include "pathroid/spread.h"

using namespace pathroid;
using testing_oracles::mono;

namespace {

// Γ straight from the definition: compare every pair of generators.
std::set<std::pair<std::size_t, std::size_t>> bruteGammaEdges(const MonomialIdeal& I) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = I.ringDim();
  for (const auto& u : I.gens())
    for (const auto& v : I.gens())
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (u.timesVariable(i) == v.timesVariable(j)) out.insert({i, j});
  return out;
}

}  // namespace

TEST_CASE("linear relation graph matches its definition") {
  for (const PartitionSpec& spec : partitionsUpTo(6)) {
    for (int t = 2; t <= spec.vertexCount(); ++t) {
      MonomialIdeal I = pathIdeal(spec, t);
      if (I.isZero()) continue;
      LinearRelationGraph g = linearRelationGraph(I);
      auto brute = bruteGammaEdges(I);
      CHECK(std::set<std::pair<std::size_t, std::size_t>>(g.edges.begin(), g.edges.end()) ==
            brute);
    }
  }
  CHECK_THROWS_AS(linearRelationGraph(MonomialIdeal(3)), std::invalid_argument);
}

TEST_CASE("spread and limit depth of bipartite path ideals") {
  LinearRelationGraph g = linearRelationGraph(pathIdeal(PartitionSpec({2, 3}), 3));
  CHECK(g.vertexCount() == 5);
  CHECK(g.isComplete());
  CHECK(g.components == 1);

  MonomialIdeal i33 = pathIdeal(PartitionSpec({3, 3}), 4);
  CHECK(analyticSpread(i33) == 5);
  CHECK(limitDepthFormula(i33) == 1);
  MonomialIdeal i24 = pathIdeal(PartitionSpec({2, 4}), 4);
  CHECK(analyticSpread(i24) == 4);
  CHECK(limitDepthFormula(i24) == 2);
  // Principal: Γ is empty and ℓ = 1.
  MonomialIdeal principal = pathIdeal(PartitionSpec({1, 2}), 3);
  CHECK(linearRelationGraph(principal).vertexCount() == 0);
  CHECK(analyticSpread(principal) == 1);
}

TEST_CASE("each block spans a clique of Γ") {
  for (const PartitionSpec& spec : partitionsUpTo(6)) {
    for (int t = 2; t < spec.vertexCount(); ++t) {
      MonomialIdeal I = pathIdeal(spec, t);
      if (I.isZero()) continue;
      LinearRelationGraph g = linearRelationGraph(I);
      std::set<std::size_t> inGamma(g.vertices.begin(), g.vertices.end());
      for (int b = 0; b < spec.blockCount(); ++b) {
        auto block = members(spec.blockMask(b));
        bool allIn = true;
        for (int v : block) allIn = allIn && inGamma.count(v);
        if (!allIn) continue;
        for (std::size_t x = 0; x < block.size(); ++x)
          for (std::size_t y = x + 1; y < block.size(); ++y)
            CHECK(g.hasEdge(block[x], block[y]));
      }
    }
  }
}

TEST_CASE("closed-form dstab regimes") {
  auto f = closedFormDstab(PartitionSpec({2, 4}), 4);
  CHECK(f.kind == DstabFormula::Kind::kExact);
  CHECK(f.value == 2);
  CHECK(closedFormDstab(PartitionSpec({4, 2}), 4).value == 2);
  CHECK(closedFormDstab(PartitionSpec({1, 3}), 3).value == 2);
  auto sq = closedFormDstab(PartitionSpec({2, 2, 2}), 3);
  CHECK(sq.kind == DstabFormula::Kind::kExact);
  CHECK(sq.value == 2);
  CHECK(closedFormDstab(PartitionSpec({1, 1, 1}), 3).value == 1);
  auto odd = closedFormDstab(PartitionSpec({2, 3}), 3);
  CHECK(odd.kind == DstabFormula::Kind::kBounds);
  CHECK(odd.lo == 2);
  CHECK(odd.hi == 4);
  CHECK(odd.admits(3));
  CHECK_FALSE(odd.admits(1));
  auto even = closedFormDstab(PartitionSpec({3, 3}), 4);
  CHECK(even.kind == DstabFormula::Kind::kBounds);
  CHECK(even.lo == 1);
  CHECK(even.hi == 4);
  CHECK(closedFormDstab(PartitionSpec({1, 1, 3}), 3).value == 2);
  CHECK(closedFormDstab(PartitionSpec({1, 1, 4}), 2).value == 2);
  CHECK_THROWS_AS(closedFormDstab(PartitionSpec({1, 4}), 4), std::invalid_argument);
  Json j = toJson(odd);
  CHECK(j["kind"] == "bounds");
  CHECK(j["lo"] == 2);
}

TEST_CASE("Veronese constructions and recognition") {
  CHECK(veronese(3, 2).size() == 6);
  CHECK(squarefreeVeronese(5, 2).size() == 10);
  CHECK(veroneseTypeIdeal(3, 2, {1, 1, 1}) == squarefreeVeronese(3, 2));
  CHECK_THROWS_AS(veroneseTypeIdeal(2, 5, {1, 1}), std::invalid_argument);
  auto m = recognizeSquarefreeVeronese(squarefreeVeronese(5, 3));
  CHECK(m.matches);
  CHECK(m.degree == 3);
  CHECK_FALSE(recognizeSquarefreeVeronese(pathIdeal(PartitionSpec({1, 3}), 3)).matches);
}

TEST_CASE("Cohen-Macaulay verdicts") {
  auto sq = classifyPathIdealCM(PartitionSpec({2, 2, 2}), 3);
  CHECK(sq.isCM);
  CHECK(sq.kind == CMKind::kSquarefreeVeronese);
  auto principal = classifyPathIdealCM(PartitionSpec({1, 2}), 3);
  CHECK(principal.isCM);
  CHECK(principal.kind == CMKind::kPrincipal);
  auto not_cm = classifyPathIdealCM(PartitionSpec({1, 2, 3}), 4);
  CHECK_FALSE(not_cm.isCM);
  CHECK(not_cm.failingBlock == 3);
  CHECK_THROWS_AS(classifyPathIdealCM(PartitionSpec({1, 4}), 4), std::invalid_argument);
  Json j = toJson(not_cm);
  CHECK(j["isCM"] == false);
  CHECK(j["failingBlock"] == 3);
  CHECK(cmKindName(CMKind::kSquarefreeVeronese) == "squarefreeVeronese");
}

TEST_CASE("Veronese relations") {
  for (int n = 2; n <= 6; ++n) {
    for (int d = 1; d <= n; ++d) {
      MonomialIdeal sq = squarefreeVeronese(n, d);
      CHECK(recognizeSquarefreeVeronese(sq).matches);
      CHECK(checkPolymatroidalExchange(sq).holds);
      CHECK(veroneseTypeIdeal(n, d, std::vector<int>(n, d)) == veronese(n, d));
      CHECK(veroneseTypeIdeal(n, d, std::vector<int>(n, d + 2)) == veronese(n, d));
    }
  }
}

TEST_CASE("CM classifier equivalence on all specs with sum <= 8") {
  for (const PartitionSpec& spec : partitionsUpTo(8)) {
    for (int t = 2; t <= spec.vertexCount(); ++t) {
      MonomialIdeal I = pathIdeal(spec, t);
      if (I.isZero()) continue;
      bool small = true;
      for (int s : spec.sizes()) small = small && s <= (t + 1) / 2;
      bool recognised = I.isPrincipal() || recognizeSquarefreeVeronese(I).matches;
      CHECK(classifyPathIdealCM(spec, t).isCM == small);
      CHECK(recognised == small);
    }
  }
}
