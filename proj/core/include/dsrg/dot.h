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

// Graphviz export of skeletons and riggings. Vertices are printed 1-based.
//
// Floor node styles: Empty is a plain ellipse, Double a filled ellipse,
// ForwardCycle a dashed ellipse, BackwardCycle a box.

#ifndef DSRG_DOT_H_
#define DSRG_DOT_H_

#include <string>

#include "dsrg/skeleton.h"

namespace dsrg {

// Special vertex and every floor; edges are complete transitions.
std::string SkeletonDot(const SkeletonRigging& sr);

// Floors only (the special vertex has no rigging edges); edges carry their
// shift digits, e.g. "12".
std::string RiggingDot(const SkeletonRigging& sr);

// "(2,3,4)" for the floor with 0-based vertices 1, 2, 3.
std::string FloorLabel(const std::array<int, 3>& floor);

}  // namespace dsrg

#endif  // DSRG_DOT_H_
