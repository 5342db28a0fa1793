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

#ifndef PATHROID_MONOMIAL_H_
#define PATHROID_MONOMIAL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pathroid {

using Exponent = std::uint64_t;

// A monomial x_1^{a_1} ... x_n^{a_n} of a polynomial ring of fixed dimension
// n. Variable indices are 0-based in the API; text rendering is 1-based.
// Exponent arithmetic is checked and throws std::overflow_error on wrap.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents)
      : exponents_(std::move(exponents)) {}

  static Monomial one(std::size_t n) {
    return Monomial(std::vector<Exponent>(n, 0));
  }
  static Monomial variable(std::size_t n, std::size_t i);
  // Product of the variables whose index is a set bit of `mask`.
  static Monomial squarefree(std::size_t n, std::uint64_t mask);

  std::size_t dim() const { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const Exponent> exponents() const { return exponents_; }

  Exponent degree() const;
  bool isOne() const;
  bool isSquarefree() const;
  bool divides(const Monomial& other) const;
  std::vector<std::size_t> support() const;
  // Bit mask of the support; requires dim() <= 64.
  std::uint64_t supportMask() const;

  // this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial timesVariable(std::size_t i) const;
  Monomial overVariable(std::size_t i) const;

  // "x1^2*x3", or "1".
  std::string toString() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<Exponent> exponents_;
};

Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

// Canonical serialization order: lex with x1 > x2 > ..., largest first.
inline bool lexGreater(const Monomial& a, const Monomial& b) { return a > b; }

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace pathroid

#endif  // PATHROID_MONOMIAL_H_
