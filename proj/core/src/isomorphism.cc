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

#include "dsrg/isomorphism.h"

#include <algorithm>
#include <bit>
#include <map>

namespace dsrg {
namespace {

using Colors = std::vector<int>;

// Refines the colourings of two digraphs in lockstep so that colour ids mean
// the same thing on both sides. Returns false as soon as the colour class
// sizes differ.
bool JointRefine(const AdjacencyMatrix& a, const AdjacencyMatrix& b,
                 Colors& ca, Colors& cb) {
  const int v = a.order();
  const AdjacencyMatrix* graphs[2] = {&a, &b};
  Colors* colors[2] = {&ca, &cb};
  int classes = 0;
  for (int x : ca) classes = std::max(classes, x + 1);
  for (int x : cb) classes = std::max(classes, x + 1);
  for (;;) {
    std::vector<uint64_t> members[2];
    for (int g = 0; g < 2; ++g) {
      members[g].assign(classes, 0);
      for (int x = 0; x < v; ++x) {
        members[g][(*colors[g])[x]] |= uint64_t{1} << x;
      }
    }
    std::vector<std::vector<int>> sig[2];
    for (int g = 0; g < 2; ++g) {
      sig[g].resize(v);
      for (int x = 0; x < v; ++x) {
        std::vector<int>& s = sig[g][x];
        s.reserve(1 + 2 * classes);
        s.push_back((*colors[g])[x]);
        const uint64_t out = graphs[g]->OutMask(x);
        const uint64_t in = graphs[g]->InMask(x);
        for (int c = 0; c < classes; ++c) {
          s.push_back(std::popcount(out & members[g][c]));
          s.push_back(std::popcount(in & members[g][c]));
        }
      }
    }
    std::map<std::vector<int>, int> ids;
    for (int g = 0; g < 2; ++g) {
      for (const auto& s : sig[g]) ids.emplace(s, 0);
    }
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<int> count(next, 0);
    for (int x = 0; x < v; ++x) {
      ca[x] = ids[sig[0][x]];
      cb[x] = ids[sig[1][x]];
      ++count[ca[x]];
      --count[cb[x]];
    }
    for (int c : count) {
      if (c != 0) return false;
    }
    if (next == classes) return true;
    classes = next;
  }
}

int ClassCount(const Colors& c) {
  int classes = 0;
  for (int x : c) classes = std::max(classes, x + 1);
  return classes;
}

// Smallest non-singleton colour class, ties to the lower colour.
int TargetCell(const Colors& c) {
  const int classes = ClassCount(c);
  std::vector<int> size(classes, 0);
  for (int x : c) ++size[x];
  int best = -1;
  for (int k = 0; k < classes; ++k) {
    if (size[k] > 1 && (best < 0 || size[k] < size[best])) best = k;
  }
  return best;
}

bool Search(const AdjacencyMatrix& a, const AdjacencyMatrix& b, Colors ca,
            Colors cb, std::vector<int>& pi) {
  if (!JointRefine(a, b, ca, cb)) return false;
  const int v = a.order();
  const int cell = TargetCell(ca);
  if (cell < 0) {
    std::vector<int> where(v);
    for (int y = 0; y < v; ++y) where[cb[y]] = y;
    pi.assign(v, 0);
    for (int x = 0; x < v; ++x) pi[x] = where[ca[x]];
    return IsIsomorphism(a, b, pi);
  }
  const int fresh = ClassCount(ca);
  int u = 0;
  while (ca[u] != cell) ++u;
  for (int w = 0; w < v; ++w) {
    if (cb[w] != cell) continue;
    Colors na = ca, nb = cb;
    na[u] = fresh;
    nb[w] = fresh;
    if (Search(a, b, std::move(na), std::move(nb), pi)) return true;
  }
  return false;
}

boost::multiprecision::cpp_int CountFrom(const AdjacencyMatrix& a, Colors c) {
  Colors twin = c;
  JointRefine(a, a, c, twin);
  const int cell = TargetCell(c);
  if (cell < 0) return 1;
  const int fresh = ClassCount(c);
  int u = 0;
  while (c[u] != cell) ++u;
  Colors fixed = c;
  fixed[u] = fresh;
  // Orbit of u under the automorphisms preserving c.
  int orbit = 0;
  std::vector<int> pi;
  for (int w = 0; w < a.order(); ++w) {
    if (c[w] != cell) continue;
    if (w == u) {
      ++orbit;
      continue;
    }
    Colors moved = c;
    moved[w] = fresh;
    if (Search(a, a, fixed, moved, pi)) ++orbit;
  }
  return orbit * CountFrom(a, std::move(fixed));
}

}  // namespace

std::vector<int> EquitableColoring(const AdjacencyMatrix& a,
                                   std::vector<int> initial) {
  if (initial.empty()) initial.assign(a.order(), 0);
  Colors twin = initial;
  JointRefine(a, a, initial, twin);
  return initial;
}

bool IsIsomorphism(const AdjacencyMatrix& a, const AdjacencyMatrix& b,
                   const std::vector<int>& pi) {
  const int v = a.order();
  if (b.order() != v || static_cast<int>(pi.size()) != v) return false;
  uint64_t seen = 0;
  for (int x : pi) {
    if (x < 0 || x >= v || ((seen >> x) & 1)) return false;
    seen |= uint64_t{1} << x;
  }
  for (int i = 0; i < v; ++i) {
    for (int j = 0; j < v; ++j) {
      if (a.Has(i, j) != b.Has(pi[i], pi[j])) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> Isomorphism(const AdjacencyMatrix& a,
                                            const AdjacencyMatrix& b) {
  if (a.order() != b.order() || a.EdgeCount() != b.EdgeCount()) {
    return std::nullopt;
  }
  std::vector<int> pi;
  if (a.order() == 0) return pi;
  if (Search(a, b, Colors(a.order(), 0), Colors(b.order(), 0), pi)) return pi;
  return std::nullopt;
}

boost::multiprecision::cpp_int AutomorphismCount(const AdjacencyMatrix& a) {
  if (a.order() == 0) return 1;
  return CountFrom(a, Colors(a.order(), 0));
}

}  // namespace dsrg
