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

// Brute-force reference implementations shared by the tests. They are
// deliberately naive and independent of the library algorithms.

#ifndef PATHROID_TESTS_ORACLES_UTIL_H_
#define PATHROID_TESTS_ORACLES_UTIL_H_

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "pathroid/graph.h"
#include "pathroid/monomial_ideal.h"
#include "pathroid/rank.h"

namespace testing_oracles {

using pathroid::Monomial;
using pathroid::MonomialIdeal;
using pathroid::VertexSet;

inline Monomial mono(std::vector<pathroid::Exponent> e) { return Monomial(std::move(e)); }

// m in (gens) iff some listed monomial divides m.
inline bool dividedBySome(const std::vector<Monomial>& gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

// Quadratic divisibility filter, result as a sorted set.
inline std::set<Monomial> minimalSet(const std::vector<Monomial>& gens) {
  std::set<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < gens.size() && minimal; ++j) {
      if (gens[j] == gens[i]) continue;
      if (gens[j].divides(gens[i])) minimal = false;
    }
    if (minimal) out.insert(gens[i]);
  }
  return out;
}

inline std::set<Monomial> asSet(const MonomialIdeal& I) {
  return {I.gens().begin(), I.gens().end()};
}

// Every exponent vector with entries in [0, bound].
inline std::vector<Monomial> box(std::size_t n, unsigned bound) {
  std::vector<Monomial> out;
  std::vector<pathroid::Exponent> e(n, 0);
  for (;;) {
    out.emplace_back(e);
    std::size_t i = 0;
    while (i < n && e[i] == bound) e[i++] = 0;
    if (i == n) return out;
    ++e[i];
  }
}

inline MonomialIdeal randomIdeal(std::mt19937& rng, std::size_t n, int gens,
                                 unsigned maxExp) {
  std::vector<Monomial> ms;
  for (int g = 0; g < gens; ++g) {
    std::vector<pathroid::Exponent> e(n);
    for (auto& x : e) x = rng() % (maxExp + 1);
    ms.emplace_back(e);
  }
  return MonomialIdeal::minimalize(ms, n);
}

// Rank over Q by textbook Gaussian elimination on exact rationals.
inline std::size_t rationalOracleRank(const pathroid::IntMatrix& m) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a(m.rows, std::vector<Q>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = m.at(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t p = rank;
    while (p < m.rows && a[p][c] == 0) ++p;
    if (p == m.rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Q f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Vertex sets of t-paths found by trying every ordered sequence.
inline std::set<VertexSet> bruteTPathSupports(const pathroid::SimpleGraph& g, int t) {
  std::set<VertexSet> out;
  const int n = static_cast<int>(g.vertexCount());
  std::vector<int> seq;
  std::function<void(VertexSet)> go = [&](VertexSet used) {
    if (static_cast<int>(seq.size()) == t) {
      out.insert(used);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      if (!seq.empty() && !g.adjacent(seq.back(), v)) continue;
      seq.push_back(v);
      go(used | (VertexSet{1} << v));
      seq.pop_back();
    }
  };
  go(0);
  return out;
}

// (EP) checked literally over all triples.
inline bool bruteBasisExchange(const std::vector<VertexSet>& bases) {
  std::set<VertexSet> b(bases.begin(), bases.end());
  for (VertexSet A : b) {
    for (VertexSet B : b) {
      for (int a = 0; a < 64; ++a) {
        if (!((A >> a) & 1u) || ((B >> a) & 1u)) continue;
        bool found = false;
        for (int x = 0; x < 64 && !found; ++x) {
          if (!((B >> x) & 1u) || ((A >> x) & 1u)) continue;
          found = b.count((A & ~(VertexSet{1} << a)) | (VertexSet{1} << x)) > 0;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

inline pathroid::SimpleGraph randomGraph(std::mt19937& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return pathroid::SimpleGraph(n, edges);
}

}  // namespace testing_oracles

#endif  // PATHROID_TESTS_ORACLES_UTIL_H_
