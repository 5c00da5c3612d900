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

#ifndef DSRG_DIGRAPH_H_
#define DSRG_DIGRAPH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "dsrg/int_matrix.h"

namespace dsrg {

// Parameter set (v, k, t, lambda, mu) of a directed strongly regular graph.
struct DsrgParams {
  int v = 0;
  int k = 0;
  int t = 0;
  int lambda = 0;
  int mu = 0;

  // Enforces 0 < k < v, t <= k, lambda < k, mu <= k; throws kInvalidParams.
  static DsrgParams Make(int v, int k, int t, int lambda, int mu);

  friend bool operator==(const DsrgParams&, const DsrgParams&) = default;
};

std::string ToString(const DsrgParams& p);

// Parameters of the complement digraph J - I - A:
// (v, v-k-1, v-2k+t-1, v-2k+mu-2, v-2k+lambda). Throws kNegativeParameter.
DsrgParams ComplementParams(const DsrgParams& p);

// Loop-free 0/1 adjacency matrix of order v <= 64, stored as one 64-bit word
// per row and per column.
class AdjacencyMatrix {
 public:
  static constexpr int kMaxOrder = 64;

  AdjacencyMatrix() = default;
  // Edgeless digraph of order v.
  explicit AdjacencyMatrix(int v);

  // Throws kParseError on entries outside {0,1} or a nonzero diagonal.
  static AdjacencyMatrix FromIntMatrix(const IntMatrix& m);
  // One string of '0'/'1' per row.
  static AdjacencyMatrix FromRows(const std::vector<std::string>& rows);

  int order() const { return v_; }
  bool Has(int i, int j) const { return (rows_[i] >> j) & 1u; }
  uint64_t OutMask(int i) const { return rows_[i]; }
  uint64_t InMask(int j) const { return cols_[j]; }
  int OutDegree(int i) const;
  int InDegree(int j) const;
  int EdgeCount() const;

  // Setting a diagonal entry throws kParseError.
  void Set(int i, int j, bool value);

  IntMatrix ToIntMatrix() const;
  std::vector<std::string> ToRows() const;

  friend bool operator==(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    return a.v_ == b.v_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    return a.v_ != b.v_ ? a.v_ < b.v_ : a.rows_ < b.rows_;
  }

 private:
  int v_ = 0;
  std::vector<uint64_t> rows_;
  std::vector<uint64_t> cols_;
};

// J - I - A.
AdjacencyMatrix Complement(const AdjacencyMatrix& a);
// Transpose: every edge reversed.
AdjacencyMatrix Reverse(const AdjacencyMatrix& a);
// B[perm[i]][perm[j]] = A[i][j].
AdjacencyMatrix Permute(const AdjacencyMatrix& a, const std::vector<int>& perm);

// Directed cycle 0 -> 1 -> ... -> v-1 -> 0.
AdjacencyMatrix DirectedCycle(int v);

}  // namespace dsrg

#endif  // DSRG_DIGRAPH_H_
