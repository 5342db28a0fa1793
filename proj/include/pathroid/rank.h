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

#ifndef PATHROID_RANK_H_
#define PATHROID_RANK_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pathroid {

// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Rank over the rationals by fraction-free (Bareiss) elimination. Runs on
// 64-bit integers and restarts with arbitrary precision if a step overflows.
std::size_t rationalRank(const IntMatrix& m);

// Exposed for tests: the arbitrary-precision path alone.
std::size_t rationalRankBig(const IntMatrix& m);

}  // namespace pathroid

#endif  // PATHROID_RANK_H_
