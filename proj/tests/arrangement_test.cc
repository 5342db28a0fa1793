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

#include "pathroid/arrangement.h"
#include "pathroid/graph.h"

using namespace pathroid;

TEST_CASE("grid layout for counts 5,3,2,2") {
  ColorCounts counts({5, 3, 2, 2});
  CHECK(counts.total() == 12);
  CHECK(counts.threshold() == 6);
  auto seq = arrange(counts);
  REQUIRE(seq.has_value());
  CHECK(*seq == std::vector<int>{1, 2, 4, 1, 2, 4, 1, 2, 1, 3, 1, 3});
  CHECK(isValidArrangement(*seq, counts));
  // Five columns of heights 3,3,2,2,2, each headed by colour 1.
  for (int head : {0, 3, 6, 8, 10}) CHECK((*seq)[head] == 1);
}

TEST_CASE("ties keep input order and zero counts are dropped") {
  ColorCounts counts({2, 0, 3, 3});
  REQUIRE(counts.colourCount() == 3);
  CHECK(counts.classes()[0].colour == 3);
  CHECK(counts.classes()[1].colour == 4);
  CHECK(counts.classes()[2].colour == 1);
  CHECK_THROWS_AS(ColorCounts({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ColorCounts({2, -1}), std::invalid_argument);
}

TEST_CASE("feasibility boundary") {
  CHECK_FALSE(arrange(ColorCounts({5, 1})).has_value());
  CHECK(arrange(ColorCounts({3, 2})).has_value());
  CHECK(arrange(ColorCounts({1})).has_value());
  CHECK_FALSE(arrange(ColorCounts({2})).has_value());
  CHECK(*arrange(ColorCounts({4, 4})) == std::vector<int>{1, 2, 1, 2, 1, 2, 1, 2});
}

TEST_CASE("validity checker") {
  ColorCounts counts({2, 1});
  CHECK(isValidArrangement(std::vector<int>{1, 2, 1}, counts));
  CHECK_FALSE(isValidArrangement(std::vector<int>{1, 1, 2}, counts));
  CHECK_FALSE(isValidArrangement(std::vector<int>{1, 2}, counts));
  CHECK_FALSE(isValidArrangement(std::vector<int>{1, 2, 3}, counts));
}

TEST_CASE("random count vectors: success iff largest <= ceil(t/2)") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> v(1 + rng() % 8);
    for (auto& c : v) c = rng() % 7;
    if (std::all_of(v.begin(), v.end(), [](int c) { return c == 0; })) continue;
    ColorCounts counts(v);
    auto seq = arrange(counts);
    CHECK(seq.has_value() == (counts.largest() <= counts.threshold()));
    if (seq) CHECK(isValidArrangement(*seq, counts));
  }
}

TEST_CASE("vertex sets arranged as paths of K_spec") {
  PartitionSpec spec({1, 2, 3});
  SimpleGraph g = completeMultipartite(spec);
  for (VertexSet a = 1; a < (VertexSet{1} << 6); ++a) {
    auto order = arrangeAsPath(spec, a);
    CHECK(order.has_value() ==
          (maxBlockIntersection(spec, a) <= (cardinality(a) + 1) / 2));
    if (!order) continue;
    VertexSet seen = 0;
    for (std::size_t k = 0; k < order->size(); ++k) {
      seen |= VertexSet{1} << (*order)[k];
      if (k) CHECK(g.adjacent((*order)[k - 1], (*order)[k]));
    }
    CHECK(seen == a);
  }
}

TEST_CASE("identical counts give identical output") {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      CHECK(arrange(ColorCounts({a, b, 2})) == arrange(ColorCounts({a, b, 2})));
}

TEST_CASE("small blocks: every t-subset is arranged into a path") {
  for (const PartitionSpec& spec : partitionsUpTo(8)) {
    const int n = spec.vertexCount();
    for (int t = 2; t <= n; ++t) {
      bool small = true;
      for (int s : spec.sizes()) small = small && s <= (t + 1) / 2;
      if (!small) continue;
      PathSet paths = enumerateTPaths(completeMultipartite(spec), t);
      for (VertexSet a = 0; a < (VertexSet{1} << n); ++a) {
        if (cardinality(a) != t) continue;
        CHECK(arrangeAsPath(spec, a).has_value());
        CHECK(paths.containsSet(a));
      }
    }
  }
}
