// Copyright 2026 The dsrg-circulant Authors
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

// Decomposition of a digraph with floor structure into floor colours, the
// skeleton (complete transitions) and the rigging (partial transitions).
//
// Between floors F = (a_0, a_1, a_2) and G = (b_0, b_1, b_2) a shift s means
// the edges a_i -> b_{(i+s) mod 3}. The shift set {0, 1, 2} is a complete
// transition and belongs to the skeleton; nonempty proper subsets are
// rigging labels.

#ifndef DSRG_SKELETON_H_
#define DSRG_SKELETON_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsrg/digraph.h"
#include "dsrg/floors.h"

namespace dsrg {

enum class FloorColor : uint8_t {
  kEmpty = 0,
  kForwardCycle = 1,   // a_i -> a_{i+1}
  kBackwardCycle = 2,  // a_i -> a_{i+2}
  kDouble = 3,
};

std::string_view FloorColorName(FloorColor color);

// Shift masks use bit s for shift s.
inline constexpr uint8_t kAllShifts = 0b111;

struct RiggingEdge {
  int from = 0;  // floor index
  int to = 0;
  uint8_t shifts = 0;

  friend bool operator==(const RiggingEdge&, const RiggingEdge&) = default;
};

struct SkeletonRigging {
  FloorStructure floors;
  std::vector<FloorColor> colors;
  std::vector<bool> from_special;  // special -> every vertex of floor f
  std::vector<bool> to_special;    // every vertex of floor f -> special
  std::vector<uint8_t> shifts;     // n x n row-major, diagonal unused

  int n() const { return static_cast<int>(colors.size()); }
  uint8_t Shifts(int f, int g) const { return shifts[f * n() + g]; }

  // Node 0 is the special vertex, node 1 + f is floor f.
  std::vector<std::pair<int, int>> SkeletonEdges() const;
  std::vector<RiggingEdge> RiggingEdges() const;

  friend bool operator==(const SkeletonRigging&,
                         const SkeletonRigging&) = default;
};

// Throws kIllegalFloorInterior or kNotShiftInvariant.
SkeletonRigging ExtractSkeletonRigging(const AdjacencyMatrix& a,
                                       const FloorStructure& fs);

AdjacencyMatrix ExpandSkeletonRigging(const SkeletonRigging& sr);

// Shift digits in increasing order, e.g. 0b110 -> "12".
std::string ShiftDigits(uint8_t mask);

}  // namespace dsrg

#endif  // DSRG_SKELETON_H_
