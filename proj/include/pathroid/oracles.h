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

#ifndef PATHROID_ORACLES_H_
#define PATHROID_ORACLES_H_

#include <cstddef>
#include <vector>

#include "pathroid/monomial_ideal.h"

namespace pathroid {

// Total Betti numbers b_i(I) from the Taylor complex: in multidegree a the
// chains are generator subsets with lcm a, and only faces keeping the lcm
// survive the differential after tensoring with the field. Independent of
// the upper-Koszul engine. At most 16 generators.
std::vector<std::size_t> taylorBettiTotals(const MonomialIdeal& I);

// Squarefree ideal in variables x_{i,1..d_i}, d_i the largest exponent of x_i,
// with x_i^e replaced by x_{i,1} ... x_{i,e}. Keeps graded Betti numbers.
MonomialIdeal polarize(const MonomialIdeal& I);

// depth(S/I) through the Stanley-Reisner oracle on the polarization. At most
// 20 polarized variables.
int polarizedDepthOracle(const MonomialIdeal& I);

}  // namespace pathroid

#endif  // PATHROID_ORACLES_H_
