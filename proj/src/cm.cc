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

#include "pathroid/cm.h"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace pathroid {

MonomialIdeal veroneseTypeIdeal(int n, int d, const std::vector<int>& caps) {
  if (n < 1) throw std::invalid_argument("ring dimension must be positive");
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  if (static_cast<int>(caps.size()) != n) {
    throw std::invalid_argument("one cap per variable expected");
  }
  long long capSum = 0;
  for (int c : caps) {
    if (c < 0) throw std::invalid_argument("caps must be non-negative");
    capSum += c;
  }
  if (capSum < d) throw std::invalid_argument("caps sum below the degree");

  std::vector<Monomial> gens;
  std::vector<Exponent> e(n, 0);
  std::function<void(int, int)> fill = [&](int var, int remaining) {
    if (var == n) {
      if (remaining == 0) gens.emplace_back(e);
      return;
    }
    for (int b = std::min(caps[var], remaining); b >= 0; --b) {
      e[var] = b;
      fill(var + 1, remaining - b);
    }
    e[var] = 0;
  };
  fill(0, d);
  return MonomialIdeal::minimalize(std::move(gens), n);
}

MonomialIdeal squarefreeVeronese(int n, int d) {
  return veroneseTypeIdeal(n, d, std::vector<int>(n, 1));
}

MonomialIdeal veronese(int n, int d) {
  return veroneseTypeIdeal(n, d, std::vector<int>(n, d));
}

VeroneseMatch recognizeSquarefreeVeronese(const MonomialIdeal& I) {
  auto degree = I.generatingDegree();
  if (!degree || !I.isSquarefree() || *degree > I.ringDim()) return {};
  int d = static_cast<int>(*degree);
  // Exact count comparison is enough: G(I) is a set of distinct squarefree
  // degree-d monomials, so it is everything iff it has C(n, d) elements.
  long double expected = 1;
  for (int k = 0; k < d; ++k) {
    expected = expected * (I.ringDim() - k) / (k + 1);
  }
  if (static_cast<long double>(I.size()) != expected) return {};
  return {true, d};
}

std::string cmKindName(CMKind kind) {
  switch (kind) {
    case CMKind::kPrincipal:
      return "principal";
    case CMKind::kVeronese:
      return "veronese";
    case CMKind::kSquarefreeVeronese:
      return "squarefreeVeronese";
    case CMKind::kNotCM:
      return "notCM";
  }
  return "notCM";
}

CMVerdict classifyPathIdealCM(const PartitionSpec& spec, int t) {
  MonomialIdeal ideal = pathIdeal(spec, t);
  if (ideal.isZero()) throw std::invalid_argument("path ideal is zero");
  const int half = (t + 1) / 2;

  CMVerdict verdict;
  if (t == spec.vertexCount()) {
    verdict = {true, CMKind::kPrincipal, std::nullopt};
  } else {
    verdict = {true, CMKind::kSquarefreeVeronese, std::nullopt};
    for (int b = 0; b < spec.blockCount(); ++b) {
      if (spec.sizes()[b] > half) {
        verdict = {false, CMKind::kNotCM, b + 1};
        break;
      }
    }
  }

  bool recognized = ideal.isPrincipal() || recognizeSquarefreeVeronese(ideal).matches;
  if (recognized != verdict.isCM) {
    throw std::logic_error("CM criterion disagrees with the constructed ideal for K_{" +
                           spec.toString() + "}, t = " + std::to_string(t));
  }
  return verdict;
}

}  // namespace pathroid
