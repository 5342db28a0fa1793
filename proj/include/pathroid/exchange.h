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

#ifndef PATHROID_EXCHANGE_H_
#define PATHROID_EXCHANGE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "pathroid/graph.h"
#include "pathroid/monomial_ideal.h"

namespace pathroid {

// Candidate bases of a matroid on {0, ..., groundSize - 1}.
class SetSystem {
 public:
  // Throws std::invalid_argument if `bases` is empty, not equicardinal or
  // leaves the ground set. Duplicates are dropped.
  SetSystem(int groundSize, std::vector<VertexSet> bases);

  int groundSize() const { return ground_size_; }
  const std::vector<VertexSet>& bases() const { return bases_; }
  int rank() const { return cardinality(bases_.front()); }

 private:
  int ground_size_;
  std::vector<VertexSet> bases_;
};

// A triple (A, B, index) for which no exchange partner exists.
template <class Element>
struct ExchangeWitness {
  Element first;
  Element second;
  std::size_t index;
};

template <class Element>
struct ExchangeVerdict {
  bool holds = true;
  std::optional<ExchangeWitness<Element>> witness;
};

// (EP): for all A, B and a in A \ B some b in B \ A has (A - a) + b a base.
// The witness is the first failure in canonical (A, B, a) order.
ExchangeVerdict<VertexSet> checkBasisExchange(const SetSystem& s);

// Symmetric exchange for equigenerated ideals: for u, v in G(I) with
// u_i > v_i there is j with u_j < v_j and x_j u / x_i in G(I). Throws
// std::invalid_argument for the zero ideal or mixed generator degrees.
ExchangeVerdict<Monomial> checkPolymatroidalExchange(const MonomialIdeal& I);

// True iff u, v in G(I), u_i > v_i and no exchange partner j exists.
bool exchangeFailsAt(const MonomialIdeal& I, const Monomial& u,
                     const Monomial& v, std::size_t i);

struct EdgeIdealMatroidality {
  bool matroidal = false;
  // Blocks in original 0-based labels (isolated vertices excluded) and their
  // sizes, present iff matroidal.
  std::optional<std::vector<std::vector<int>>> blocks;
  std::optional<PartitionSpec> partition;
};

// Strips isolated vertices, decides whether I_2(G) is matroidal and, if so,
// recovers the partition from neighbourhood-equality classes. Throws
// std::invalid_argument for edgeless graphs.
EdgeIdealMatroidality isMatroidalEdgeIdeal(const SimpleGraph& g);

}  // namespace pathroid

#endif  // PATHROID_EXCHANGE_H_
