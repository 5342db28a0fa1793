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

#include "pathroid/rank.h"

#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace pathroid {
namespace {

// Bareiss elimination with full row pivoting on columns. `Ops` abstracts the
// arithmetic so one body serves both integer widths; returns nullopt when the
// 64-bit variant overflows.
template <class T, class Ops>
std::optional<std::size_t> bareissRank(std::vector<T> a, std::size_t rows,
                                       std::size_t cols, Ops ops) {
  auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * cols + c]; };
  T previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(pivot, k), at(rank, k));
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        // (p * a_rk - a_rc * a_pk) / previous is exact.
        std::optional<T> next = ops.cross(at(rank, c), at(r, k), at(r, c),
                                          at(rank, k), previous);
        if (!next) return std::nullopt;
        at(r, k) = *next;
      }
      at(r, c) = 0;
    }
    previous = at(rank, c);
    ++rank;
  }
  return rank;
}

struct CheckedOps {
  std::optional<std::int64_t> cross(std::int64_t p, std::int64_t x,
                                    std::int64_t y, std::int64_t q,
                                    std::int64_t d) const {
    std::int64_t px, yq, diff;
    if (__builtin_mul_overflow(p, x, &px) || __builtin_mul_overflow(y, q, &yq) ||
        __builtin_sub_overflow(px, yq, &diff)) {
      return std::nullopt;
    }
    return diff / d;
  }
};

using BigInt = boost::multiprecision::cpp_int;

struct BigOps {
  std::optional<BigInt> cross(const BigInt& p, const BigInt& x, const BigInt& y,
                              const BigInt& q, const BigInt& d) const {
    return BigInt((p * x - y * q) / d);
  }
};

}  // namespace

std::size_t rationalRankBig(const IntMatrix& m) {
  std::vector<BigInt> big(m.data.begin(), m.data.end());
  return *bareissRank<BigInt>(std::move(big), m.rows, m.cols, BigOps{});
}

std::size_t rationalRank(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (auto r = bareissRank<std::int64_t>(m.data, m.rows, m.cols, CheckedOps{})) {
    return *r;
  }
  return rationalRankBig(m);
}

}  // namespace pathroid
