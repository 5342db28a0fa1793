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

#include "pathroid/oracles.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "pathroid/rank.h"
#include "pathroid/resolution.h"

namespace pathroid {

std::vector<std::size_t> taylorBettiTotals(const MonomialIdeal& I) {
  if (I.isZero()) throw std::invalid_argument("Taylor oracle needs a nonzero ideal");
  const std::size_t m = I.size();
  if (m > 16) throw std::invalid_argument("Taylor oracle supports at most 16 generators");
  const std::uint32_t subsets = 1u << m;

  std::vector<Monomial> lcmOf(subsets);
  std::map<Monomial, std::vector<std::uint32_t>> byLcm;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    std::uint32_t low = s & (~s + 1);
    int bit = __builtin_ctz(s);
    lcmOf[s] = (s == low) ? I.gens()[bit] : lcm(lcmOf[s & ~low], I.gens()[bit]);
    byLcm[lcmOf[s]].push_back(s);
  }

  std::vector<std::size_t> totals(m, 0);
  for (const auto& [degree, members] : byLcm) {
    // chains[c] = subsets of size c with this lcm; homological index c - 1.
    std::vector<std::vector<std::uint32_t>> chains(m + 1);
    for (std::uint32_t s : members) chains[__builtin_popcount(s)].push_back(s);
    std::vector<std::size_t> rankTo(m + 2, 0);  // rank of C_c -> C_{c-1}
    for (std::size_t c = 2; c <= m; ++c) {
      if (chains[c].empty() || chains[c - 1].empty()) continue;
      std::unordered_map<std::uint32_t, std::size_t> row;
      for (std::size_t k = 0; k < chains[c - 1].size(); ++k) row[chains[c - 1][k]] = k;
      IntMatrix d(chains[c - 1].size(), chains[c].size());
      for (std::size_t col = 0; col < chains[c].size(); ++col) {
        std::uint32_t s = chains[c][col];
        int position = 0;
        for (std::uint32_t rest = s; rest != 0; rest &= rest - 1, ++position) {
          auto it = row.find(s & ~(rest & (~rest + 1)));
          if (it != row.end()) d.at(it->second, col) = position % 2 == 0 ? 1 : -1;
        }
      }
      rankTo[c] = rationalRank(d);
    }
    for (std::size_t c = 1; c <= m; ++c) {
      totals[c - 1] += chains[c].size() - rankTo[c] - rankTo[c + 1];
    }
  }
  while (totals.size() > 1 && totals.back() == 0) totals.pop_back();
  return totals;
}

MonomialIdeal polarize(const MonomialIdeal& I) {
  const std::size_t n = I.ringDim();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent d = 0;
    for (const Monomial& g : I.gens()) d = std::max(d, g[i]);
    offset[i + 1] = offset[i] + d;
  }
  std::vector<Monomial> gens;
  for (const Monomial& g : I.gens()) {
    std::vector<Exponent> e(offset[n], 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (Exponent j = 0; j < g[i]; ++j) e[offset[i] + j] = 1;
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::minimalize(std::move(gens), offset[n]);
}

int polarizedDepthOracle(const MonomialIdeal& I) {
  MonomialIdeal p = polarize(I);
  const int pd = static_cast<int>(p.ringDim()) - stanleyReisnerDepthOracle(p);
  return static_cast<int>(I.ringDim()) - pd;
}

}  // namespace pathroid
