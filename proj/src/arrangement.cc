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

#include "pathroid/arrangement.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pathroid {

ColorCounts::ColorCounts(const std::vector<int>& countsByColour) {
  for (std::size_t c = 0; c < countsByColour.size(); ++c) {
    int k = countsByColour[c];
    if (k < 0) throw std::invalid_argument("colour counts must be non-negative");
    if (k > 0) classes_.push_back({static_cast<int>(c) + 1, k});
    total_ += k;
  }
  if (total_ == 0) throw std::invalid_argument("arrangement needs at least one item");
  std::stable_sort(classes_.begin(), classes_.end(),
                   [](const ColorClass& a, const ColorClass& b) {
                     return a.count > b.count;
                   });
}

std::optional<std::vector<int>> arrange(const ColorCounts& counts) {
  const int t = counts.total();
  const int columns = counts.largest();
  if (columns > counts.threshold()) return std::nullopt;
  const int rows = (t + columns - 1) / columns;

  // Row-major fill, -1 marks an empty cell in the last row.
  std::vector<int> grid(static_cast<std::size_t>(rows) * columns, -1);
  std::size_t cell = 0;
  for (const auto& cls : counts.classes()) {
    for (int k = 0; k < cls.count; ++k) grid[cell++] = cls.colour;
  }
  std::vector<int> seq;
  seq.reserve(t);
  for (int c = 0; c < columns; ++c) {
    for (int r = 0; r < rows; ++r) {
      int colour = grid[static_cast<std::size_t>(r) * columns + c];
      if (colour >= 0) seq.push_back(colour);
    }
  }
  return seq;
}

bool isValidArrangement(std::span<const int> seq, const ColorCounts& counts) {
  if (static_cast<int>(seq.size()) != counts.total()) return false;
  std::map<int, int> seen;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k > 0 && seq[k] == seq[k - 1]) return false;
    ++seen[seq[k]];
  }
  std::map<int, int> expected;
  for (const auto& cls : counts.classes()) expected[cls.colour] = cls.count;
  return seen == expected;
}

std::optional<std::vector<int>> arrangeAsPath(const PartitionSpec& spec,
                                              VertexSet a) {
  std::vector<int> perBlock(spec.blockCount(), 0);
  std::vector<std::vector<int>> vertices(spec.blockCount());
  for (int v : members(a)) {
    int b = spec.blockOf(v);
    ++perBlock[b];
    vertices[b].push_back(v);
  }
  auto colours = arrange(ColorCounts(perBlock));
  if (!colours) return std::nullopt;
  std::vector<std::size_t> next(spec.blockCount(), 0);
  std::vector<int> path;
  for (int colour : *colours) {
    int b = colour - 1;
    path.push_back(vertices[b][next[b]++]);
  }
  return path;
}

}  // namespace pathroid
