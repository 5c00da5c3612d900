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

#include "dsrg/floors.h"

#include <algorithm>
#include <string>

#include "dsrg/error.h"
#include "dsrg/isomorphism.h"

namespace dsrg {

std::vector<int> FloorStructure::Permutation() const {
  std::vector<int> pi(order());
  pi[special] = special;
  for (const auto& f : floors) {
    for (int i = 0; i < 3; ++i) pi[f[i]] = f[(i + 1) % 3];
  }
  return pi;
}

FloorStructure ConstructionFloors(int order) {
  FloorStructure fs;
  fs.special = 0;
  for (int x = 1; x + 2 < order; x += 3) fs.floors.push_back({x, x + 1, x + 2});
  return fs;
}

bool IsAutomorphism(const AdjacencyMatrix& a, const std::vector<int>& pi) {
  return IsIsomorphism(a, a, pi);
}

namespace {

// Depth-first over sigma(p) for the smallest open position p, values
// ascending. Cycle closures forced by a choice land on positions above p,
// so the first complete assignment is lexicographically least.
class Z3Finder {
 public:
  explicit Z3Finder(const AdjacencyMatrix& a)
      : a_(a), v_(a.order()), color_(EquitableColoring(a)),
        sigma_(v_, -1), pre_(v_, -1) {}

  bool Run() { return Step(); }
  const std::vector<int>& sigma() const { return sigma_; }

 private:
  bool Consistent(int x) const {
    const int sx = sigma_[x];
    if (color_[sx] != color_[x]) return false;
    for (int y = 0; y < v_; ++y) {
      const int sy = sigma_[y];
      if (sy < 0) continue;
      if (a_.Has(x, y) != a_.Has(sx, sy) || a_.Has(y, x) != a_.Has(sy, sx)) {
        return false;
      }
    }
    return true;
  }

  // Assigns sigma(x) = y unless that contradicts the partial map.
  bool Try(int x, int y, std::vector<int>& trail) {
    if (sigma_[x] >= 0) return sigma_[x] == y;
    if (pre_[y] >= 0) return false;
    sigma_[x] = y;
    pre_[y] = x;
    trail.push_back(x);
    return Consistent(x);
  }

  void Undo(std::vector<int>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      pre_[sigma_[*it]] = -1;
      sigma_[*it] = -1;
    }
    trail.clear();
  }

  bool Step() {
    int p = 0;
    while (p < v_ && sigma_[p] >= 0) ++p;
    if (p == v_) return true;
    std::vector<int> trail;
    for (int y = 0; y < v_; ++y) {
      if (pre_[y] >= 0) continue;
      bool ok;
      if (y == p) {
        if (fixed_used_) continue;
        ok = Try(p, p, trail);
        fixed_used_ = true;
      } else {
        ok = Try(p, y, trail);
        // Close the 3-cycle through p and y once two of its edges are known.
        if (ok && sigma_[y] >= 0) {
          ok = sigma_[y] != p && Try(sigma_[y], p, trail);
        } else if (ok && pre_[p] >= 0) {
          ok = Try(y, pre_[p], trail);
        }
      }
      if (ok && Step()) return true;
      if (y == p) fixed_used_ = false;
      Undo(trail);
    }
    return false;
  }

  const AdjacencyMatrix& a_;
  int v_;
  std::vector<int> color_;
  std::vector<int> sigma_;
  std::vector<int> pre_;
  bool fixed_used_ = false;
};

FloorStructure FromPermutation(const std::vector<int>& sigma) {
  FloorStructure fs;
  const int v = static_cast<int>(sigma.size());
  std::vector<bool> seen(v, false);
  for (int x = 0; x < v; ++x) {
    if (seen[x]) continue;
    if (sigma[x] == x) {
      fs.special = x;
      seen[x] = true;
      continue;
    }
    fs.floors.push_back({x, sigma[x], sigma[sigma[x]]});
    for (int y : fs.floors.back()) seen[y] = true;
  }
  return fs;
}

}  // namespace

FloorStructure FindFloorStructure(const AdjacencyMatrix& a) {
  const int v = a.order();
  if (v % 3 != 1) {
    throw Error(ErrorCode::kNoZ3Structure,
                "order " + std::to_string(v) + " is not 1 mod 3");
  }
  FloorStructure fs = ConstructionFloors(v);
  if (IsAutomorphism(a, fs.Permutation())) return fs;
  Z3Finder finder(a);
  if (!finder.Run()) {
    throw Error(ErrorCode::kNoZ3Structure,
                "no order-3 automorphism with a single fixed point");
  }
  return FromPermutation(finder.sigma());
}

}  // namespace dsrg
