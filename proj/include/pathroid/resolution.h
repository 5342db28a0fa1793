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

#ifndef PATHROID_RESOLUTION_H_
#define PATHROID_RESOLUTION_H_

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pathroid/homology.h"
#include "pathroid/monomial_ideal.h"

namespace pathroid {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class KMaxExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wall-clock allowance shared by a computation. Default: unlimited.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;
  static Budget seconds(double s) {
    Budget b;
    b.deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(s));
    return b;
  }
  bool expired() const { return deadline_ && Clock::now() > *deadline_; }
  void check() const {
    if (expired()) throw BudgetExceeded("homology budget exceeded");
  }

 private:
  std::optional<Clock::time_point> deadline_;
};

struct EngineOptions {
  Budget budget;
  int workers = 1;
};

// Multigraded Betti numbers b_{i,a}(I), keyed by (i, a). Only nonzero
// entries are stored.
struct BettiTable {
  std::size_t ringDim = 0;
  std::map<std::pair<int, Monomial>, std::size_t> entries;

  std::size_t at(int i, const Monomial& a) const;
  // totals()[i] = sum over a of b_{i,a}(I).
  std::vector<std::size_t> totals() const;
  // Largest i with a nonzero entry; -1 for an empty table.
  int maxIndex() const;
};

// K^a(I): squarefree F ⊆ supp(a) with x^a / x^F in I, labelled by variable.
SimplicialComplex upperKoszulComplex(const MonomialIdeal& I, const Monomial& a);

// b_{i,a}(I) = rank H̃_{i-1}(K^a(I); Q) over the lcm lattice of G(I).
BettiTable bettiNumbers(const MonomialIdeal& I, const EngineOptions& opts = {});

// pd(S/I) = 1 + max{i : b_{i,a}(I) != 0}; I nonzero and proper.
int projectiveDimension(const MonomialIdeal& I, const EngineOptions& opts = {});

// depth(S/I) = n - pd(S/I) (Auslander-Buchsbaum).
int depthOfQuotient(const MonomialIdeal& I, const EngineOptions& opts = {});

// depth(S/I) through Hochster's formula on the Stanley-Reisner complex:
// b_{i,σ}(S/I) = rank H̃_{|σ|-i-1}(Δ_σ). I squarefree, proper, nonzero.
int stanleyReisnerDepthOracle(const MonomialIdeal& I);

struct DepthProfile {
  // depths[k - 1] = depth(S/I^k).
  std::vector<int> depths;
  int limitDepth = 0;
  int dstab = 1;
};

// depth(S/I^k) for k = 1, 2, ... until it reaches `limitDepthHint`; dstab is
// that first k. Throws KMaxExceeded past `kMax`, std::logic_error if the
// sequence increases or undershoots the hint, std::invalid_argument unless I
// is equigenerated and polymatroidal.
DepthProfile depthProfile(const MonomialIdeal& I, int limitDepthHint, int kMax,
                          const EngineOptions& opts = {});

// depth(S/I^k) for k = 1..kMax.
std::vector<int> depthSequence(const MonomialIdeal& I, int kMax,
                               const EngineOptions& opts = {});

}  // namespace pathroid

#endif  // PATHROID_RESOLUTION_H_
