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

#include "pathroid/monomial_ideal.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace pathroid {
namespace {

void requireSameRing(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ringDim() != J.ringDim()) {
    throw std::invalid_argument("ideals live in rings of different dimension");
  }
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t ringDim) : ring_dim_(ringDim) {
  if (ringDim == 0) throw std::invalid_argument("ring dimension must be positive");
}

MonomialIdeal MonomialIdeal::minimalize(std::vector<Monomial> gens,
                                        std::size_t ringDim) {
  MonomialIdeal ideal(ringDim);
  for (const Monomial& m : gens) {
    if (m.dim() != ringDim) {
      throw std::invalid_argument("monomial length differs from ring dimension");
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Only a strictly smaller-degree monomial can properly divide another.
  std::vector<std::pair<Exponent, Monomial>> byDegree;
  byDegree.reserve(gens.size());
  for (Monomial& m : gens) {
    Exponent d = m.degree();
    byDegree.emplace_back(d, std::move(m));
  }
  std::stable_sort(byDegree.begin(), byDegree.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Monomial> kept;
  std::size_t lowerEnd = 0;  // kept[0, lowerEnd) have degree < current
  Exponent currentDegree = byDegree.empty() ? 0 : byDegree.front().first;
  for (auto& [d, m] : byDegree) {
    if (d != currentDegree) {
      lowerEnd = kept.size();
      currentDegree = d;
    }
    bool redundant = false;
    for (std::size_t k = 0; k < lowerEnd && !redundant; ++k) {
      redundant = kept[k].divides(m);
    }
    if (!redundant) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end(), lexGreater);
  ideal.gens_ = std::move(kept);
  return ideal;
}

MonomialIdeal MonomialIdeal::unit(std::size_t ringDim) {
  return minimalize({Monomial::one(ringDim)}, ringDim);
}

MonomialIdeal MonomialIdeal::maximal(std::size_t ringDim) {
  std::vector<Monomial> vars;
  for (std::size_t i = 0; i < ringDim; ++i) {
    vars.push_back(Monomial::variable(ringDim, i));
  }
  return minimalize(std::move(vars), ringDim);
}

bool MonomialIdeal::isSquarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& m) { return m.isSquarefree(); });
}

std::optional<Exponent> MonomialIdeal::generatingDegree() const {
  if (gens_.empty()) return std::nullopt;
  Exponent d = gens_.front().degree();
  for (const Monomial& m : gens_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

bool MonomialIdeal::isGenerator(const Monomial& m) const {
  return std::binary_search(gens_.begin(), gens_.end(), m, lexGreater);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  requireSameRing(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  requireSameRing(I, J);
  std::vector<Monomial> all(I.gens());
  all.insert(all.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal::minimalize(std::move(all), I.ringDim());
}

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
  requireSameRing(I, J);
  std::unordered_set<Monomial, MonomialHash> products;
  products.reserve(I.size() * J.size());
  for (const Monomial& u : I.gens()) {
    for (const Monomial& v : J.gens()) products.insert(u * v);
  }
  return MonomialIdeal::minimalize({products.begin(), products.end()},
                                   I.ringDim());
}

MonomialIdeal multiply(const MonomialIdeal& I, const Monomial& m) {
  return multiply(I, MonomialIdeal::minimalize({m}, I.ringDim()));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  requireSameRing(I, J);
  std::unordered_set<Monomial, MonomialHash> lcms;
  for (const Monomial& u : I.gens()) {
    for (const Monomial& v : J.gens()) lcms.insert(lcm(u, v));
  }
  return MonomialIdeal::minimalize({lcms.begin(), lcms.end()}, I.ringDim());
}

MonomialIdeal power(const MonomialIdeal& I, int k) {
  if (k < 1) throw std::invalid_argument("power exponent must be >= 1");
  MonomialIdeal result = I;
  for (int j = 1; j < k; ++j) result = multiply(result, I);
  return result;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
  if (m.dim() != I.ringDim()) {
    throw std::invalid_argument("monomial length differs from ring dimension");
  }
  std::vector<Monomial> quotients;
  quotients.reserve(I.size());
  for (const Monomial& u : I.gens()) quotients.push_back(u.quotient(gcd(u, m)));
  return MonomialIdeal::minimalize(std::move(quotients), I.ringDim());
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  requireSameRing(I, J);
  if (J.isZero()) throw std::invalid_argument("colon by the zero ideal");
  MonomialIdeal result = colon(I, J.gens().front());
  for (std::size_t k = 1; k < J.size(); ++k) {
    result = intersect(result, colon(I, J.gens()[k]));
  }
  return result;
}

std::vector<std::size_t> support(const MonomialIdeal& I) {
  if (I.isZero()) throw std::invalid_argument("support of the zero ideal");
  std::vector<bool> seen(I.ringDim(), false);
  for (const Monomial& g : I.gens()) {
    for (std::size_t i : g.support()) seen[i] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

bool isFullySupported(const MonomialIdeal& I) {
  return support(I).size() == I.ringDim();
}

Monomial gcdOf(const MonomialIdeal& I) {
  if (I.isZero()) throw std::invalid_argument("gcd of the zero ideal");
  Monomial g = I.gens().front();
  for (const Monomial& u : I.gens()) g = gcd(g, u);
  return g;
}

std::optional<std::size_t> FiberDecomposition::firstBrokenLink() const {
  for (std::size_t j = 0; j + 1 < layers.size(); ++j) {
    if (!layers[j + 1].contains(layers[j])) return j;
  }
  return std::nullopt;
}

bool FiberDecomposition::isChain() const {
  return !firstBrokenLink().has_value();
}

MonomialIdeal FiberDecomposition::reconstruct() const {
  std::size_t n = layers.front().ringDim();
  std::vector<Monomial> gens;
  for (std::size_t j = 0; j < layers.size(); ++j) {
    std::vector<Exponent> e(n, 0);
    e[variableIndex] = j;
    Monomial shift(std::move(e));
    for (const Monomial& u : layers[j].gens()) gens.push_back(u * shift);
  }
  return MonomialIdeal::minimalize(std::move(gens), n);
}

FiberDecomposition fiberDecompose(const MonomialIdeal& I, std::size_t i) {
  if (I.isZero()) throw std::invalid_argument("fiber decomposition of the zero ideal");
  if (i >= I.ringDim()) throw std::out_of_range("variable index out of range");
  Exponent d = 0;
  for (const Monomial& u : I.gens()) d = std::max(d, u[i]);
  std::vector<std::vector<Monomial>> buckets(d + 1);
  for (const Monomial& u : I.gens()) {
    std::vector<Exponent> e(u.exponents().begin(), u.exponents().end());
    Exponent j = e[i];
    e[i] = 0;
    buckets[j].emplace_back(std::move(e));
  }
  FiberDecomposition fd{i, {}};
  for (auto& b : buckets) {
    fd.layers.push_back(MonomialIdeal::minimalize(std::move(b), I.ringDim()));
  }
  return fd;
}

}  // namespace pathroid
