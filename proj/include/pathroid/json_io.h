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

#ifndef PATHROID_JSON_IO_H_
#define PATHROID_JSON_IO_H_

#include <json.hpp>

#include "pathroid/cm.h"
#include "pathroid/exchange.h"
#include "pathroid/graph.h"
#include "pathroid/monomial_ideal.h"
#include "pathroid/resolution.h"
#include "pathroid/spread.h"

namespace pathroid {

using Json = nlohmann::json;

// Monomial: exponent array.
Json toJson(const Monomial& m);
Monomial monomialFromJson(const Json& j);

// {"ringDim": n, "gens": [[...], ...]} with gens in canonical order. Reading
// minimalizes and validates lengths.
Json toJson(const MonomialIdeal& I);
MonomialIdeal idealFromJson(const Json& j);

// {"vertices": n, "edges": [[i, j], ...]}, 1-based.
Json toJson(const SimpleGraph& g);
SimpleGraph graphFromJson(const Json& j);

// {"i:a1,...,an": rank}.
Json toJson(const BettiTable& table);

// {"vertices": [...], "edges": [[i, j], ...], "components": s}, 1-based.
Json toJson(const LinearRelationGraph& g);

// {"kind": "exact", "value": v} | {"kind": "bounds", "lo": a, "hi": b} |
// {"kind": "uncovered"}, plus "regime".
Json toJson(const DstabFormula& f);

// {"isCM": bool, "kind": ..., "failingBlock": b | null}.
Json toJson(const CMVerdict& v);

// {"holds": bool, "witness": {"A": [...], "B": [...], "a": x} | null}.
Json toJson(const ExchangeVerdict<VertexSet>& v);
// {"holds": bool, "witness": {"u": [...], "v": [...], "i": x} | null}.
Json toJson(const ExchangeVerdict<Monomial>& v);

}  // namespace pathroid

#endif  // PATHROID_JSON_IO_H_
