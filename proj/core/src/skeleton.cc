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

#include "dsrg/skeleton.h"

#include "dsrg/error.h"

namespace dsrg {
namespace {

std::string FloorName(const std::array<int, 3>& f) {
  return "(" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
         std::to_string(f[2]) + ")";
}

// Shift mask of the edges from floor f to floor g; -1 if some shift class
// is only partly present.
int ShiftMask(const AdjacencyMatrix& a, const std::array<int, 3>& f,
              const std::array<int, 3>& g) {
  int mask = 0;
  for (int s = 0; s < 3; ++s) {
    int present = 0;
    for (int i = 0; i < 3; ++i) present += a.Has(f[i], g[(i + s) % 3]);
    if (present == 3) mask |= 1 << s;
    else if (present != 0) return -1;
  }
  return mask;
}

// 0 none, 1 all, -1 partial.
int AllOrNothing(int present) {
  return present == 0 ? 0 : present == 3 ? 1 : -1;
}

}  // namespace

std::string_view FloorColorName(FloorColor color) {
  switch (color) {
    case FloorColor::kEmpty: return "Empty";
    case FloorColor::kForwardCycle: return "ForwardCycle";
    case FloorColor::kBackwardCycle: return "BackwardCycle";
    case FloorColor::kDouble: return "Double";
  }
  return "Unknown";
}

std::vector<std::pair<int, int>> SkeletonRigging::SkeletonEdges() const {
  std::vector<std::pair<int, int>> out;
  for (int f = 0; f < n(); ++f) {
    if (from_special[f]) out.emplace_back(0, f + 1);
  }
  for (int f = 0; f < n(); ++f) {
    if (to_special[f]) out.emplace_back(f + 1, 0);
    for (int g = 0; g < n(); ++g) {
      if (f != g && Shifts(f, g) == kAllShifts) out.emplace_back(f + 1, g + 1);
    }
  }
  return out;
}

std::vector<RiggingEdge> SkeletonRigging::RiggingEdges() const {
  std::vector<RiggingEdge> out;
  for (int f = 0; f < n(); ++f) {
    for (int g = 0; g < n(); ++g) {
      const uint8_t s = f == g ? 0 : Shifts(f, g);
      if (s != 0 && s != kAllShifts) out.push_back({f, g, s});
    }
  }
  return out;
}

SkeletonRigging ExtractSkeletonRigging(const AdjacencyMatrix& a,
                                       const FloorStructure& fs) {
  if (fs.order() != a.order()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "floor structure does not match the digraph order");
  }
  SkeletonRigging sr;
  sr.floors = fs;
  const int n = static_cast<int>(fs.floors.size());
  sr.colors.resize(n);
  sr.from_special.resize(n);
  sr.to_special.resize(n);
  sr.shifts.assign(static_cast<size_t>(n) * n, 0);
  for (int f = 0; f < n; ++f) {
    const auto& fl = fs.floors[f];
    const int inner = ShiftMask(a, fl, fl);
    if (inner < 0 || (inner & 1)) {
      throw Error(ErrorCode::kIllegalFloorInterior,
                  "floor " + FloorName(fl) + " is not a union of 3-cycles");
    }
    sr.colors[f] = static_cast<FloorColor>(inner >> 1);

    int out = 0, in = 0;
    for (int x : fl) {
      out += a.Has(fs.special, x);
      in += a.Has(x, fs.special);
    }
    if (AllOrNothing(out) < 0 || AllOrNothing(in) < 0) {
      throw Error(ErrorCode::kNotShiftInvariant,
                  "special vertex edges to floor " + FloorName(fl) +
                      " are partial");
    }
    sr.from_special[f] = out == 3;
    sr.to_special[f] = in == 3;

    for (int g = 0; g < n; ++g) {
      if (g == f) continue;
      const int mask = ShiftMask(a, fl, fs.floors[g]);
      if (mask < 0) {
        throw Error(ErrorCode::kNotShiftInvariant,
                    "edges " + FloorName(fl) + " -> " +
                        FloorName(fs.floors[g]) + " are not shift classes");
      }
      sr.shifts[f * n + g] = static_cast<uint8_t>(mask);
    }
  }
  return sr;
}

AdjacencyMatrix ExpandSkeletonRigging(const SkeletonRigging& sr) {
  const FloorStructure& fs = sr.floors;
  AdjacencyMatrix a(fs.order());
  const int n = sr.n();
  for (int f = 0; f < n; ++f) {
    const auto& fl = fs.floors[f];
    const int inner = static_cast<int>(sr.colors[f]) << 1;
    for (int g = 0; g < n; ++g) {
      const int mask = g == f ? inner : sr.Shifts(f, g);
      for (int s = 0; s < 3; ++s) {
        if (!((mask >> s) & 1)) continue;
        for (int i = 0; i < 3; ++i) a.Set(fl[i], fs.floors[g][(i + s) % 3], true);
      }
    }
    for (int x : fl) {
      if (sr.from_special[f]) a.Set(fs.special, x, true);
      if (sr.to_special[f]) a.Set(x, fs.special, true);
    }
  }
  return a;
}

std::string ShiftDigits(uint8_t mask) {
  std::string out;
  for (int s = 0; s < 8; ++s) {
    if ((mask >> s) & 1) out.push_back(static_cast<char>('0' + s));
  }
  return out;
}

}  // namespace dsrg
