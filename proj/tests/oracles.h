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


// Oracles shared by the unit suites and the acceptance binary. Each one is
// written from the definitions and shares no code with the library routine
// it checks.

#ifndef DSRG_TESTS_ORACLES_H_
#define DSRG_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "dsrg/circulant.h"
#include "dsrg/digraph.h"
#include "dsrg/int_matrix.h"
#include "dsrg/stage1.h"

namespace dsrg::testing {

// Block matrix whose blocks are circulants with random first rows.
inline IntMatrix RandomCirculantBlocks(int n, int m, int max_entry,
                                std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, max_entry);
  IntMatrix out(n * m, n * m);
  for (int bi = 0; bi < n; ++bi) {
    for (int bj = 0; bj < n; ++bj) {
      std::vector<int64_t> first(m);
      for (auto& x : first) x = dist(rng);
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
          out(bi * m + r, bj * m + c) = first[((c - r) % m + m) % m];
        }
      }
    }
  }
  return out;
}

// Schoolbook convolution with exponents reduced mod m.
inline CycPoly NaiveMul(const CycPoly& p, const CycPoly& q) {
  const int m = p.modulus();
  std::vector<int64_t> c(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) c[(i + j) % m] += p.coeff(i) * q.coeff(j);
  }
  return CycPoly(m, c);
}

inline CompactMatrix PrintedShrikhandeCompact() {
  const int m = 4;
  const CycPoly z = CycPoly::Zero(m);
  const std::vector<std::vector<CycPoly>> rows = {
      {z, CycPoly(m, {0, 0, 1, 1}), CycPoly(m, {0, 0, 1, 1}), CycPoly(m, {0, 1, 0, 1})},
      {CycPoly(m, {0, 1, 1, 0}), z, CycPoly(m, {0, 1, 0, 1}), CycPoly(m, {0, 0, 1, 1})},
      {CycPoly(m, {0, 1, 1, 0}), CycPoly(m, {0, 1, 0, 1}), z, CycPoly(m, {1, 1, 0, 0})},
      {CycPoly(m, {0, 1, 0, 1}), CycPoly(m, {0, 1, 1, 0}), CycPoly(m, {1, 0, 0, 1}), z},
  };
  CompactMatrix s(4, m);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) s.set(i, j, rows[i][j]);
  }
  return s;
}

// Definition-level check by explicit triple loops, sharing no code with the
// library verifiers.
inline bool NaiveIsDsrg(const AdjacencyMatrix& a, const DsrgParams& p) {
  const int v = a.order();
  if (v != p.v) return false;
  for (int x = 0; x < v; ++x) {
    if (a.Has(x, x)) return false;
    int out = 0, in = 0;
    for (int y = 0; y < v; ++y) {
      out += a.Has(x, y);
      in += a.Has(y, x);
    }
    if (out != p.k || in != p.k) return false;
  }
  for (int x = 0; x < v; ++x) {
    for (int y = 0; y < v; ++y) {
      int paths = 0;
      for (int z = 0; z < v; ++z) paths += a.Has(x, z) && a.Has(z, y);
      const int expected = x == y ? p.t : a.Has(x, y) ? p.lambda : p.mu;
      if (paths != expected) return false;
    }
  }
  return true;
}

inline AdjacencyMatrix RandomRegularish(int v, int k, std::mt19937_64& rng) {
  AdjacencyMatrix a(v);
  for (int i = 0; i < v; ++i) {
    std::vector<int> others;
    for (int j = 0; j < v; ++j) {
      if (j != i) others.push_back(j);
    }
    std::shuffle(others.begin(), others.end(), rng);
    for (int c = 0; c < k; ++c) a.Set(i, others[c], true);
  }
  return a;
}

// Checks a candidate against the problem from first principles.
inline bool NaiveAccepts(const Stage1Problem& p, const IntMatrix& m) {
  const int n = p.n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m(i, j) < 0 || m(i, j) > (i == j ? p.diag_bound : p.offdiag_bound)) {
        return false;
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    int64_t in = 0, out = 0;
    for (int i = 0; i < n; ++i) (p.sums.b_rows[i] ? in : out) += m(i, j);
    if (in != p.sums.col_in[j] || out != p.sums.col_out[j]) return false;
  }
  for (int i = 0; i < n; ++i) {
    int64_t in = 0, out = 0;
    for (int j = 0; j < n; ++j) (p.sums.d_cols[j] ? in : out) += m(i, j);
    if (in != p.sums.row_in[i] || out != p.sums.row_out[i]) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int64_t sq = 0;
      for (int k = 0; k < n; ++k) sq += m(i, k) * m(k, j);
      if (sq + p.shift * m(i, j) != p.target(i, j)) return false;
    }
  }
  return true;
}

// Every n x n matrix with entries in [0, m], in row-major lexicographic
// order, filtered by NaiveAccepts.
inline std::vector<IntMatrix> NaiveEnumerate(const Stage1Problem& p) {
  const int n = p.n, cells = n * n;
  std::vector<IntMatrix> out;
  IntMatrix m(n, n);
  for (;;) {
    if (NaiveAccepts(p, m)) out.push_back(m);
    int c = cells - 1;
    while (c >= 0 && m(c / n, c % n) == p.offdiag_bound) m(c / n, c % n) = 0, --c;
    if (c < 0) break;
    ++m(c / n, c % n);
  }
  return out;
}

// The compact border product printed for the paper instance.
inline IntMatrix PrintedH7() {
  IntMatrix h(7, 7, 4);
  for (int i : {0, 1, 3}) {
    for (int j = 0; j < 3; ++j) h(i, j) = 3;
  }
  return h;
}

}  // namespace dsrg::testing

#endif  // DSRG_TESTS_ORACLES_H_
