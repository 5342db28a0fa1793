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

#ifndef PATHROID_MONOMIAL_IDEAL_H_
#define PATHROID_MONOMIAL_IDEAL_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "pathroid/monomial.h"

namespace pathroid {

// A monomial ideal stored by its minimal generating set G(I), kept in
// canonical order (lex, largest first). The empty set is the zero ideal;
// {1} is the unit ideal. Two ideals are equal iff their G(I) coincide.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t ringDim = 1);

  // Reduces `gens` to its divisibility antichain. Throws
  // std::invalid_argument if some monomial has length != ringDim.
  static MonomialIdeal minimalize(std::vector<Monomial> gens,
                                  std::size_t ringDim);
  static MonomialIdeal unit(std::size_t ringDim);
  // (x_1, ..., x_n).
  static MonomialIdeal maximal(std::size_t ringDim);

  std::size_t ringDim() const { return ring_dim_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool isZero() const { return gens_.empty(); }
  bool isUnit() const { return gens_.size() == 1 && gens_[0].isOne(); }
  bool isPrincipal() const { return gens_.size() == 1; }
  bool isSquarefree() const;
  // Common degree of all generators, if there is one.
  std::optional<Exponent> generatingDegree() const;
  bool isEquigenerated() const { return generatingDegree().has_value(); }
  bool isGenerator(const Monomial& m) const;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t ring_dim_;
  std::vector<Monomial> gens_;
};

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal multiply(const MonomialIdeal& I, const Monomial& m);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
// I^k for k >= 1.
MonomialIdeal power(const MonomialIdeal& I, int k);
// (I : m), generated by u / gcd(u, m).
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);
// (I : J) = intersection of (I : v) over v in G(J); J must be nonzero.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

// Union of the generator supports; I must be nonzero.
std::vector<std::size_t> support(const MonomialIdeal& I);
bool isFullySupported(const MonomialIdeal& I);
Monomial gcdOf(const MonomialIdeal& I);

// I = sum_j I_j x_i^j with I_j = (u / x_i^j : u in G(I), deg_{x_i} u = j).
struct FiberDecomposition {
  std::size_t variableIndex;
  std::vector<MonomialIdeal> layers;

  // I_0 ⊆ I_1 ⊆ ... ⊆ I_d.
  bool isChain() const;
  // Index j of the first failing containment I_j ⊆ I_{j+1}, if any.
  std::optional<std::size_t> firstBrokenLink() const;
  MonomialIdeal reconstruct() const;
};

FiberDecomposition fiberDecompose(const MonomialIdeal& I, std::size_t i);

}  // namespace pathroid

#endif  // PATHROID_MONOMIAL_IDEAL_H_
