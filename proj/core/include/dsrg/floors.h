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

#ifndef DSRG_FLOORS_H_
#define DSRG_FLOORS_H_

#include <array>
#include <vector>

#include "dsrg/digraph.h"

namespace dsrg {

// The orbits of an order-3 automorphism with a single fixed point. Each
// floor lists (a, sigma(a), sigma^2(a)) from its smallest vertex; floors are
// sorted by that vertex.
struct FloorStructure {
  int special = 0;
  std::vector<std::array<int, 3>> floors;

  // The automorphism: fixes `special`, a_i -> a_{i+1} on every floor.
  std::vector<int> Permutation() const;
  int order() const { return 1 + 3 * static_cast<int>(floors.size()); }

  friend bool operator==(const FloorStructure&, const FloorStructure&) = default;
};

// Vertex 0 special, floors (1,2,3), (4,5,6), ...
FloorStructure ConstructionFloors(int order);

bool IsAutomorphism(const AdjacencyMatrix& a, const std::vector<int>& pi);

// Construction order when it is an automorphism; otherwise the order-3
// automorphism with one fixed point whose image sequence
// (sigma(0), ..., sigma(v-1)) is lexicographically least. Throws
// kNoZ3Structure if none exists or the order is not 1 mod 3.
FloorStructure FindFloorStructure(const AdjacencyMatrix& a);

}  // namespace dsrg

#endif  // DSRG_FLOORS_H_
