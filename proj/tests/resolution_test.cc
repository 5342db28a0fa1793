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
#include <limits>
#include <numeric>
#include <random>

#include "oracles_util.h"
#include "pathroid/graph.h"
#include "pathroid/homology.h"
#include "pathroid/oracles.h"
#include "pathroid/rank.h"
#include "pathroid/resolution.h"

using namespace pathroid;
using testing_oracles::mono;

TEST_CASE("rank agrees with rational elimination") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m(1 + rng() % 7, 1 + rng() % 7);
    for (auto& x : m.data) x = static_cast<int>(rng() % 7) - 3;
    // Some dependent rows.
    if (m.rows > 2 && trial % 2) {
      for (std::size_t c = 0; c < m.cols; ++c) m.at(0, c) = m.at(1, c) - 2 * m.at(2, c);
    }
    std::size_t expected = testing_oracles::rationalOracleRank(m);
    CHECK(rationalRank(m) == expected);
    CHECK(rationalRankBig(m) == expected);
  }
}

TEST_CASE("rank falls back to big integers on overflow") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 3;
  IntMatrix m(3, 3);
  m.data = {big, big - 1, 7, big - 5, big, 3, 1, 2, big};
  CHECK(rationalRank(m) == testing_oracles::rationalOracleRank(m));
  IntMatrix singular(2, 2);
  singular.data = {big, big - 1, big, big - 1};
  CHECK(rationalRank(singular) == 1);
}

TEST_CASE("reduced homology of small complexes") {
  CHECK(SimplicialComplex(0b111).reducedHomology().empty());
  // {∅}: H̃_{-1} = Q.
  SimplicialComplex empty = SimplicialComplex::fromFacets(0b111, {0});
  CHECK(empty.reducedHomology() == std::vector<std::size_t>{1});
  // Two points: H̃_0 = Q.
  auto points = SimplicialComplex::fromFacets(0b11, {0b01, 0b10}).reducedHomology();
  CHECK(points[1] == 1);
  // Boundary of a triangle: H̃_1 = Q and nothing else.
  auto circle =
      SimplicialComplex::fromFacets(0b111, {0b011, 0b101, 0b110}).reducedHomology();
  for (std::size_t c = 0; c < circle.size(); ++c) CHECK(circle[c] == (c == 2 ? 1u : 0u));
  // Boundary of a tetrahedron: H̃_2 = Q.
  auto sphere = SimplicialComplex::fromFacets(0b1111, {0b0111, 0b1011, 0b1101, 0b1110})
                    .reducedHomology();
  for (std::size_t c = 0; c < sphere.size(); ++c) CHECK(sphere[c] == (c == 3 ? 1u : 0u));
  // A full simplex is acyclic.
  auto simplex = SimplicialComplex::fromFacets(0b111, {0b111}).reducedHomology();
  for (auto r : simplex) CHECK(r == 0);
}

TEST_CASE("upper Koszul complex") {
  // I = (x1 x2, x2 x3), a = x1 x2 x3: faces F with x^a / x^F in I are
  // {}, {1}, {3}.
  MonomialIdeal I = MonomialIdeal::minimalize({mono({1, 1, 0}), mono({0, 1, 1})}, 3);
  SimplicialComplex k = upperKoszulComplex(I, mono({1, 1, 1}));
  CHECK(k.contains(0));
  CHECK(k.contains(0b001));
  CHECK(k.contains(0b100));
  CHECK_FALSE(k.contains(0b010));
  CHECK_FALSE(k.contains(0b101));
}

TEST_CASE("Betti numbers of the maximal ideal are binomial") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto totals = bettiNumbers(MonomialIdeal::maximal(n)).totals();
    std::size_t binom = n;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(totals[i] == binom);
      binom = binom * (n - i - 1) / (i + 2);
    }
    CHECK(depthOfQuotient(MonomialIdeal::maximal(n)) == 0);
  }
}

TEST_CASE("Betti totals agree with the Taylor complex") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 2 + rng() % 3;
    MonomialIdeal I = testing_oracles::randomIdeal(rng, n, 1 + rng() % 6, 3);
    if (I.isUnit()) continue;
    CHECK(bettiNumbers(I).totals() == taylorBettiTotals(I));
  }
}

TEST_CASE("Koszul depth agrees with Hochster's formula") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 3 + rng() % 4;
    SimpleGraph g = testing_oracles::randomGraph(rng, n, 0.5);
    for (int t = 2; t <= 3; ++t) {
      MonomialIdeal I = pathIdeal(g, t);
      if (I.isZero()) continue;
      CHECK(depthOfQuotient(I) == stanleyReisnerDepthOracle(I));
    }
  }
}

TEST_CASE("depth calibration on principal path ideals") {
  CHECK(depthOfQuotient(pathIdeal(PartitionSpec({1, 1}), 2)) == 1);
  CHECK(depthOfQuotient(pathIdeal(PartitionSpec({1, 1, 1}), 3)) == 2);
  CHECK(depthOfQuotient(pathIdeal(PartitionSpec({1, 1, 1}), 2)) == 1);
}

TEST_CASE("depth profiles of small bipartite path ideals") {
  MonomialIdeal I = pathIdeal(PartitionSpec({2, 4}), 4);
  CHECK(depthSequence(I, 2) == std::vector<int>{3, 2});
  DepthProfile p = depthProfile(I, 2, 6);
  CHECK(p.dstab == 2);
  CHECK(p.limitDepth == 2);
  CHECK(p.depths == std::vector<int>{3, 2});
  CHECK_THROWS_AS(depthProfile(I, 4, 6), std::logic_error);
  CHECK_THROWS_AS(depthProfile(I, 1, 6), KMaxExceeded);
  CHECK_THROWS_AS(depthProfile(pathIdeal(PartitionSpec({2, 2, 2}), 3), 0, 1),
                  KMaxExceeded);
  MonomialIdeal nonPoly = MonomialIdeal::minimalize({mono({1, 1, 0, 0}), mono({0, 0, 1, 1})}, 4);
  CHECK_THROWS_AS(depthProfile(nonPoly, 0, 4), std::invalid_argument);
}

TEST_CASE("budget and workers") {
  MonomialIdeal I = power(pathIdeal(PartitionSpec({2, 2, 2}), 3), 2);
  EngineOptions expired;
  expired.budget = Budget::seconds(-1);
  CHECK_THROWS_AS(bettiNumbers(I, expired), BudgetExceeded);
  EngineOptions parallel;
  parallel.workers = 3;
  CHECK(bettiNumbers(I, parallel).entries == bettiNumbers(I).entries);
}

TEST_CASE("colon witness for K_{1,1,3}") {
  MonomialIdeal I = pathIdeal(PartitionSpec({1, 1, 3}), 3);
  CHECK(colon(power(I, 2), Monomial::squarefree(5, 0b11111)) == MonomialIdeal::maximal(5));
  CHECK(depthOfQuotient(I) == 2);
  CHECK(depthOfQuotient(power(I, 2)) == 0);
}

TEST_CASE("strong persistence up to the third power on small path ideals") {
  for (const PartitionSpec& spec : partitionsUpTo(5)) {
    for (int t = 2; t <= spec.vertexCount(); ++t) {
      MonomialIdeal I = pathIdeal(spec, t);
      if (I.isZero()) continue;
      for (int k = 1; k <= 3; ++k) {
        CHECK(colon(power(I, k + 1), I) == power(I, k));
      }
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
          CHECK(multiply(power(I, a), power(I, b)) == power(I, a + b));
      for (std::size_t i = 0; i < I.ringDim(); ++i) {
        CHECK(fiberDecompose(power(I, 3), i).isChain());
      }
    }
  }
}

TEST_CASE("depth of non-squarefree ideals agrees with the polarized oracle") {
  MonomialIdeal I = MonomialIdeal::minimalize({mono({2, 1}), mono({0, 2})}, 2);
  CHECK(polarize(I) ==
        MonomialIdeal::minimalize({mono({1, 1, 1, 0}), mono({0, 0, 1, 1})}, 4));
  std::mt19937 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    MonomialIdeal J = testing_oracles::randomIdeal(rng, 3, 1 + rng() % 5, 3);
    if (J.isUnit()) continue;
    CHECK(depthOfQuotient(J) == polarizedDepthOracle(J));
  }
}

TEST_CASE("rank ignores row and column order") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m(2 + rng() % 5, 2 + rng() % 5);
    for (auto& x : m.data) x = static_cast<int>(rng() % 5) - 2;
    std::vector<std::size_t> rows(m.rows), cols(m.cols);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    IntMatrix p(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c) p.at(r, c) = m.at(rows[r], cols[c]);
    CHECK(rationalRank(p) == rationalRank(m));
  }
}

TEST_CASE("Auslander-Buchsbaum and monotone depth on path ideals") {
  for (const PartitionSpec& spec : partitionsUpTo(5)) {
    for (int t = 2; t <= spec.vertexCount(); ++t) {
      MonomialIdeal I = pathIdeal(spec, t);
      if (I.isZero()) continue;
      const int n = spec.vertexCount();
      CHECK(projectiveDimension(I) + depthOfQuotient(I) == n);
      std::vector<int> depths = depthSequence(I, 3);
      CHECK(std::is_sorted(depths.rbegin(), depths.rend()));
    }
  }
}

TEST_CASE("powers multiply up to the eighth power") {
  for (const PartitionSpec& spec : partitionsUpTo(4)) {
    for (int t = 2; t <= spec.vertexCount(); ++t) {
      MonomialIdeal I = pathIdeal(spec, t);
      if (I.isZero()) continue;
      for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
          CHECK(multiply(power(I, a), power(I, b)) == power(I, a + b));
    }
  }
}
