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

#ifndef PATHROID_ARRANGEMENT_H_
#define PATHROID_ARRANGEMENT_H_

#include <optional>
#include <span>
#include <vector>

#include "pathroid/graph.h"

namespace pathroid {

// Item counts per colour. Colours are 1-based labels of the input position;
// zero counts are dropped and the rest are ordered by descending count, ties
// by colour label.
class ColorCounts {
 public:
  struct ColorClass {
    int colour;
    int count;
  };

  // Throws std::invalid_argument on negative counts or an all-zero input.
  explicit ColorCounts(const std::vector<int>& countsByColour);

  const std::vector<ColorClass>& classes() const { return classes_; }
  int total() const { return total_; }
  int largest() const { return classes_.front().count; }
  int colourCount() const { return static_cast<int>(classes_.size()); }
  // ceil(t / 2).
  int threshold() const { return (total_ + 1) / 2; }

 private:
  std::vector<ColorClass> classes_;
  int total_ = 0;
};

// Orders the items so that no two neighbours share a colour, using a grid
// with (largest count) columns filled row by row with the colour blocks in
// class order and read column by column. Returns nullopt when the largest
// count exceeds ceil(t / 2).
std::optional<std::vector<int>> arrange(const ColorCounts& counts);

// True iff `seq` uses each colour exactly as often as `counts` says and has
// no two equal neighbours.
bool isValidArrangement(std::span<const int> seq, const ColorCounts& counts);

// Orders the vertices of `a` into a path of K_spec by colouring each vertex
// with its block; nullopt if some block meets `a` in more than ceil(|a|/2).
std::optional<std::vector<int>> arrangeAsPath(const PartitionSpec& spec,
                                              VertexSet a);

}  // namespace pathroid

#endif  // PATHROID_ARRANGEMENT_H_
