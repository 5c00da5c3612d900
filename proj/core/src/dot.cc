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

#include "dsrg/dot.h"

#include <sstream>

namespace dsrg {
namespace {

std::string NodeAttributes(FloorColor color) {
  switch (color) {
    case FloorColor::kEmpty: return "shape=ellipse, style=solid";
    case FloorColor::kDouble: return "shape=ellipse, style=filled";
    case FloorColor::kForwardCycle: return "shape=ellipse, style=dashed";
    case FloorColor::kBackwardCycle: return "shape=box, style=solid";
  }
  return "";
}

void FloorNodes(std::ostringstream& out, const SkeletonRigging& sr) {
  for (int f = 0; f < sr.n(); ++f) {
    out << "  f" << f << " [label=\"" << FloorLabel(sr.floors.floors[f])
        << "\", " << NodeAttributes(sr.colors[f]) << "];\n";
  }
}

}  // namespace

std::string FloorLabel(const std::array<int, 3>& floor) {
  return "(" + std::to_string(floor[0] + 1) + "," +
         std::to_string(floor[1] + 1) + "," + std::to_string(floor[2] + 1) +
         ")";
}

std::string SkeletonDot(const SkeletonRigging& sr) {
  std::ostringstream out;
  out << "digraph skeleton {\n";
  out << "  s [label=\"" << sr.floors.special + 1
      << "\", shape=ellipse, style=solid];\n";
  FloorNodes(out, sr);
  auto name = [](int node) {
    return node == 0 ? std::string("s") : "f" + std::to_string(node - 1);
  };
  for (const auto& [from, to] : sr.SkeletonEdges()) {
    out << "  " << name(from) << " -> " << name(to) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string RiggingDot(const SkeletonRigging& sr) {
  std::ostringstream out;
  out << "digraph rigging {\n";
  FloorNodes(out, sr);
  for (const RiggingEdge& e : sr.RiggingEdges()) {
    out << "  f" << e.from << " -> f" << e.to << " [label=\""
        << ShiftDigits(e.shifts) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dsrg
