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

#include "pathroid/json_io.h"

#include <stdexcept>

namespace pathroid {
namespace {

Json vertexList(VertexSet s) {
  Json out = Json::array();
  for (int v : members(s)) out.push_back(v + 1);
  return out;
}

}  // namespace

Json toJson(const Monomial& m) {
  Json out = Json::array();
  for (Exponent e : m.exponents()) out.push_back(e);
  return out;
}

Monomial monomialFromJson(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("monomial must be an integer array");
  std::vector<Exponent> e;
  for (const Json& x : j) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0)) {
      throw std::invalid_argument("exponents must be non-negative integers");
    }
    e.push_back(x.get<Exponent>());
  }
  return Monomial(std::move(e));
}

Json toJson(const MonomialIdeal& I) {
  Json gens = Json::array();
  for (const Monomial& g : I.gens()) gens.push_back(toJson(g));
  return Json{{"ringDim", I.ringDim()}, {"gens", gens}};
}

MonomialIdeal idealFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("ringDim") || !j.contains("gens")) {
    throw std::invalid_argument("ideal JSON needs ringDim and gens");
  }
  auto n = j.at("ringDim").get<long long>();
  if (n < 1) throw std::invalid_argument("ringDim must be positive");
  std::vector<Monomial> gens;
  for (const Json& g : j.at("gens")) gens.push_back(monomialFromJson(g));
  return MonomialIdeal::minimalize(std::move(gens), static_cast<std::size_t>(n));
}

Json toJson(const SimpleGraph& g) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a + 1, b + 1});
  return Json{{"vertices", g.vertexCount()}, {"edges", edges}};
}

SimpleGraph graphFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw std::invalid_argument("graph JSON needs vertices and edges");
  }
  auto n = j.at("vertices").get<long long>();
  if (n < 1) throw std::invalid_argument("vertices must be positive");
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
    edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
  }
  return SimpleGraph(static_cast<std::size_t>(n), edges);
}

Json toJson(const BettiTable& table) {
  Json out = Json::object();
  for (const auto& [key, rank] : table.entries) {
    std::string name = std::to_string(key.first) + ":";
    for (std::size_t j = 0; j < key.second.dim(); ++j) {
      if (j > 0) name += ',';
      name += std::to_string(key.second[j]);
    }
    out[name] = rank;
  }
  return out;
}

Json toJson(const LinearRelationGraph& g) {
  Json vertices = Json::array();
  for (std::size_t v : g.vertices) vertices.push_back(v + 1);
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back({a + 1, b + 1});
  return Json{{"vertices", vertices}, {"edges", edges}, {"components", g.components}};
}

Json toJson(const DstabFormula& f) {
  Json out{{"kind", kindName(f.kind)}, {"regime", f.regime}};
  if (f.kind == DstabFormula::Kind::kExact) out["value"] = f.value;
  if (f.kind == DstabFormula::Kind::kBounds) {
    out["lo"] = f.lo;
    out["hi"] = f.hi;
  }
  return out;
}

Json toJson(const CMVerdict& v) {
  return Json{{"isCM", v.isCM},
              {"kind", cmKindName(v.kind)},
              {"failingBlock", v.failingBlock ? Json(*v.failingBlock) : Json(nullptr)}};
}

Json toJson(const ExchangeVerdict<VertexSet>& v) {
  Json witness = nullptr;
  if (v.witness) {
    witness = {{"A", vertexList(v.witness->first)},
               {"B", vertexList(v.witness->second)},
               {"a", v.witness->index + 1}};
  }
  return Json{{"holds", v.holds}, {"witness", witness}};
}

Json toJson(const ExchangeVerdict<Monomial>& v) {
  Json witness = nullptr;
  if (v.witness) {
    witness = {{"u", toJson(v.witness->first)},
               {"v", toJson(v.witness->second)},
               {"i", v.witness->index + 1}};
  }
  return Json{{"holds", v.holds}, {"witness", witness}};
}

}  // namespace pathroid
