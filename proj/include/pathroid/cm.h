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

#ifndef PATHROID_CM_H_
#define PATHROID_CM_H_

#include <optional>
#include <string>
#include <vector>

#include "pathroid/graph.h"
#include "pathroid/monomial_ideal.h"

namespace pathroid {

// All degree-d monomials x^b with b_i <= caps[i]. Throws if sum(caps) < d.
MonomialIdeal veroneseTypeIdeal(int n, int d, const std::vector<int>& caps);
MonomialIdeal squarefreeVeronese(int n, int d);
MonomialIdeal veronese(int n, int d);

struct VeroneseMatch {
  bool matches = false;
  int degree = 0;
};

// Whether G(I) is the set of all squarefree monomials of one degree d in all
// ringDim variables.
VeroneseMatch recognizeSquarefreeVeronese(const MonomialIdeal& I);

enum class CMKind { kPrincipal, kVeronese, kSquarefreeVeronese, kNotCM };
std::string cmKindName(CMKind kind);

struct CMVerdict {
  bool isCM = false;
  CMKind kind = CMKind::kNotCM;
  // 1-based block with n_i > ceil(t/2), the first one found.
  std::optional<int> failingBlock;
};

// Cohen-Macaulay verdict for I_t(K_spec) from the block-size criterion,
// cross-checked against the recognizers on the constructed ideal (a mismatch
// throws std::logic_error). Throws std::invalid_argument if I_t(K_spec) = 0.
CMVerdict classifyPathIdealCM(const PartitionSpec& spec, int t);

}  // namespace pathroid

#endif  // PATHROID_CM_H_
