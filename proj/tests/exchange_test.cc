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

#include <algorithm>
#include <random>
#include <stdexcept>

#include "oracles_util.h"
#include "pathroid/cm.h"
#include "pathroid/exchange.h"
#include "pathroid/verify.h"

using namespace pathroid;
using testing_oracles::mono;

TEST_CASE("basis exchange agrees with the literal definition") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + rng() % 4;
    int k = 1 + rng() % (n - 1);
    std::vector<VertexSet> bases;
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
      if (cardinality(s) == k && rng() % 3 != 0) bases.push_back(s);
    }
    if (bases.empty()) continue;
    auto verdict = checkBasisExchange(SetSystem(n, bases));
    CHECK(verdict.holds == testing_oracles::bruteBasisExchange(bases));
    CHECK(verdict.holds != verdict.witness.has_value());
  }
}

TEST_CASE("exchange witness is the first failing triple") {
  // {1,2} and {3,4}: removing 1 from {1,2} needs {2,3} or {2,4}.
  auto verdict = checkBasisExchange(SetSystem(4, {0b0011, 0b1100}));
  REQUIRE_FALSE(verdict.holds);
  CHECK(verdict.witness->first == 0b0011);
  CHECK(verdict.witness->second == 0b1100);
  CHECK(verdict.witness->index == 0);
  CHECK_THROWS_AS(SetSystem(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(SetSystem(3, {0b001, 0b011}), std::invalid_argument);
  CHECK_THROWS_AS(SetSystem(2, {0b100}), std::invalid_argument);
}

TEST_CASE("path ideals of complete multipartite graphs satisfy exchange") {
  for (const PartitionSpec& spec : partitionsUpTo(7)) {
    for (int t = 2; t <= spec.vertexCount(); ++t) {
      MonomialIdeal I = pathIdeal(spec, t);
      if (I.isZero()) continue;
      CHECK(checkPolymatroidalExchange(I).holds);
    }
  }
}

TEST_CASE("polymatroidal exchange on Veronese type ideals and counterexamples") {
  CHECK(checkPolymatroidalExchange(veronese(3, 3)).holds);
  CHECK(checkPolymatroidalExchange(veroneseTypeIdeal(4, 3, {2, 1, 1, 2})).holds);
  MonomialIdeal bad = MonomialIdeal::minimalize({mono({2, 0, 0}), mono({0, 1, 1})}, 3);
  auto verdict = checkPolymatroidalExchange(bad);
  REQUIRE_FALSE(verdict.holds);
  CHECK(verdict.witness->first == mono({2, 0, 0}));
  CHECK(verdict.witness->index == 0);
  CHECK(exchangeFailsAt(bad, mono({2, 0, 0}), mono({0, 1, 1}), 0));
  CHECK_THROWS_AS(checkPolymatroidalExchange(MonomialIdeal(2)), std::invalid_argument);
  CHECK_THROWS_AS(
      checkPolymatroidalExchange(MonomialIdeal::minimalize({mono({1, 0}), mono({0, 2})}, 2)),
      std::invalid_argument);
}

TEST_CASE("edge ideal matroidality recovers the partition") {
  SimpleGraph k23 = completeMultipartite(PartitionSpec({2, 3}));
  auto m = isMatroidalEdgeIdeal(k23);
  REQUIRE(m.matroidal);
  CHECK(*m.partition == PartitionSpec({2, 3}));
  CHECK(m.blocks->size() == 2);

  SimpleGraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK_FALSE(isMatroidalEdgeIdeal(c5).matroidal);
  SimpleGraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(isMatroidalEdgeIdeal(p4).matroidal);

  // K_{1,2} with two isolated vertices: they are ignored.
  SimpleGraph padded(5, {{1, 2}, {1, 4}});
  auto pm = isMatroidalEdgeIdeal(padded);
  REQUIRE(pm.matroidal);
  CHECK(*pm.partition == PartitionSpec({1, 2}));
  CHECK((*pm.blocks)[0] == std::vector<int>{1});
  CHECK((*pm.blocks)[1] == std::vector<int>{2, 4});
  CHECK_THROWS_AS(isMatroidalEdgeIdeal(SimpleGraph(3, {})), std::invalid_argument);
}

TEST_CASE("every reconstructed example graph has matroidal I_3 but not I_4") {
  SixVertexSearch search = reconstructSixVertexGraph();
  CHECK(search.i3Matches.size() >= search.withPair.size());
  CHECK(search.withPair.size() >= search.hits.size());
  REQUIRE_FALSE(search.hits.empty());
  const Monomial u = Monomial::squarefree(6, 0b001111);
  const Monomial v = Monomial::squarefree(6, 0b111100);
  for (const SimpleGraph& g : search.hits) {
    CHECK(pathIdeal(g, 3) == sixVertexThreePathIdeal());
    CHECK(checkPolymatroidalExchange(pathIdeal(g, 3)).holds);
    MonomialIdeal i4 = pathIdeal(g, 4);
    CHECK_FALSE(checkPolymatroidalExchange(i4).holds);
    CHECK(exchangeFailsAt(i4, u, v, 0));
  }
  // The star at x4 alone matches I_3 but has no 4-path.
  SimpleGraph star(6, {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {3, 5}});
  CHECK(pathIdeal(star, 3) == sixVertexThreePathIdeal());
  CHECK(pathIdeal(star, 4).isZero());
}

TEST_CASE("squarefree exchange agrees with basis exchange and ignores order") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + rng() % 4;
    int k = 1 + rng() % (n - 1);
    std::vector<VertexSet> bases;
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
      if (cardinality(s) == k && rng() % 2) bases.push_back(s);
    }
    if (bases.empty()) continue;
    bool sets = checkBasisExchange(SetSystem(n, bases)).holds;
    CHECK(checkPolymatroidalExchange(squarefreeIdeal(n, bases)).holds == sets);
    std::shuffle(bases.begin(), bases.end(), rng);
    CHECK(checkBasisExchange(SetSystem(n, bases)).holds == sets);
  }
}
