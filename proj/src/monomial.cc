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

#include "pathroid/monomial.h"

#include <algorithm>
#include <stdexcept>

namespace pathroid {
namespace {

Exponent checkedAdd(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return out;
}

void requireSameDim(const Monomial& a, const Monomial& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("monomials live in rings of different dimension");
  }
}

}  // namespace

Monomial Monomial::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("variable index out of range");
  std::vector<Exponent> e(n, 0);
  e[i] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::squarefree(std::size_t n, std::uint64_t mask) {
  if (n < 64 && (mask >> n) != 0) {
    throw std::out_of_range("vertex mask exceeds ring dimension");
  }
  std::vector<Exponent> e(n, 0);
  for (std::size_t i = 0; i < n && i < 64; ++i) e[i] = (mask >> i) & 1u;
  return Monomial(std::move(e));
}

Exponent Monomial::degree() const {
  Exponent d = 0;
  for (Exponent e : exponents_) d = checkedAdd(d, e);
  return d;
}

bool Monomial::isOne() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](Exponent e) { return e == 0; });
}

bool Monomial::isSquarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  requireSameDim(*this, other);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0) s.push_back(i);
  }
  return s;
}

std::uint64_t Monomial::supportMask() const {
  if (exponents_.size() > 64) {
    throw std::length_error("support mask needs at most 64 variables");
  }
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) {
    throw std::invalid_argument("quotient by a non-divisor");
  }
  std::vector<Exponent> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= divisor.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::timesVariable(std::size_t i) const {
  if (i >= dim()) throw std::out_of_range("variable index out of range");
  std::vector<Exponent> e(exponents_);
  e[i] = checkedAdd(e[i], 1);
  return Monomial(std::move(e));
}

Monomial Monomial::overVariable(std::size_t i) const {
  if (i >= dim()) throw std::out_of_range("variable index out of range");
  if (exponents_[i] == 0) {
    throw std::invalid_argument("variable does not divide monomial");
  }
  std::vector<Exponent> e(exponents_);
  --e[i];
  return Monomial(std::move(e));
}

std::string Monomial::toString() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  requireSameDim(a, b);
  std::vector<Exponent> e(a.dim());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = checkedAdd(a.exponents_[i], b.exponents_[i]);
  }
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  requireSameDim(a, b);
  std::vector<Exponent> e(a.dim());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  requireSameDim(a, b);
  std::vector<Exponent> e(a.dim());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace pathroid
