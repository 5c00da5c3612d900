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

// The fixed first row B and first column D of the target adjacency matrix
//
//   A = ( 0  B )
//       ( D  C )
//
// and everything the search derives from them. With c = mu - lambda the
// defining equation A^2 + cA = (t - mu)I + mu J splits into
//
//   B D = t,   B C + c B = mu J,   C D + c D = mu J,
//   C^2 + c C = (t - mu) I + H,    H = mu J - D B,
//
// and the degree condition adds complementary row and column sums. Because
// B and D are constant on every block of m consecutive positions, all of
// this compactifies to n x n matrices, n = (v - 1) / m.

#ifndef DSRG_BORDER_H_
#define DSRG_BORDER_H_

#include <string>
#include <vector>

#include "dsrg/circulant.h"
#include "dsrg/digraph.h"
#include "dsrg/int_matrix.h"

namespace dsrg {

class BorderPattern {
 public:
  // Validates popcounts (k each), B.D = t and constancy on m-blocks.
  // Throws kInvalidBorder or kBadDimension.
  static BorderPattern Make(const DsrgParams& p, int block_size,
                            std::vector<bool> first_row,
                            std::vector<bool> first_col);
  // From '0'/'1' strings of length v - 1.
  static BorderPattern FromStrings(const DsrgParams& p, int block_size,
                                   const std::string& first_row,
                                   const std::string& first_col);

  int v() const { return v_; }
  int block_size() const { return block_size_; }
  int blocks() const { return (v_ - 1) / block_size_; }

  const std::vector<bool>& first_row() const { return first_row_; }
  const std::vector<bool>& first_col() const { return first_col_; }
  // B (resp. D) restricted to block I; constant by construction.
  bool RowBlock(int block) const { return first_row_[block * block_size_]; }
  bool ColBlock(int block) const { return first_col_[block * block_size_]; }

  std::string FirstRowString() const;
  std::string FirstColString() const;

  friend bool operator==(const BorderPattern&, const BorderPattern&) = default;

 private:
  int v_ = 0;
  int block_size_ = 0;
  std::vector<bool> first_row_;
  std::vector<bool> first_col_;
};

// B = ones on the first k/m blocks; D = ones on the first t/m blocks and on
// the (k - t)/m blocks right after B's support. For (22,9,6,3,4), m = 3:
// B = 1^9 0^12, D = 1^6 0^3 1^3 0^9. Throws kIndivisibleParameters.
BorderPattern DefaultBorder(const DsrgParams& p, int block_size = 3);

// H(I, J) = mu - D_I B_J.
IntMatrix HCompact(const DsrgParams& p, const BorderPattern& border);

// Linear constraints on M = C(1). Row sets index rows of M, column sets
// columns of M.
struct SumConstraints {
  std::vector<bool> b_rows;        // blocks where B = 1
  std::vector<bool> d_cols;        // blocks where D = 1
  std::vector<int64_t> col_in;     // sum over I in b_rows of M(I, J)
  std::vector<int64_t> col_out;    // sum over I not in b_rows
  std::vector<int64_t> row_in;     // sum over J in d_cols of M(I, J)
  std::vector<int64_t> row_out;    // sum over J not in d_cols

  bool SatisfiedBy(const IntMatrix& m) const;
};

struct Stage1Problem {
  int n = 0;
  int block_size = 0;
  int64_t shift = 0;        // mu - lambda
  IntMatrix target;         // (t - mu) I + m H
  int diag_bound = 0;       // m - 1
  int offdiag_bound = 0;    // m
  SumConstraints sums;

  // Bounds, sums and M^2 + shift M = target.
  bool IsSolution(const IntMatrix& m) const;
};

Stage1Problem MakeStage1Problem(const DsrgParams& p,
                                const BorderPattern& border);

// C(x)^2 + shift C(x) = target (mod x^m - 1), with
// target = (t - mu) I + (1 + x + ... + x^{m-1}) H.
struct LiftProblem {
  int n = 0;
  int block_size = 0;
  int64_t shift = 0;
  CompactMatrix target{0, 1};
};

LiftProblem MakeLiftProblem(const DsrgParams& p, const BorderPattern& border);

// Vertex 0 is the special vertex; block I of C occupies vertices
// 1 + m*I .. m*I + m.
AdjacencyMatrix AssembleAdjacency(const BorderPattern& border,
                                  const CompactMatrix& cx);

// The scalar forms of the border sum constraints checked directly on the
// (v-1) x (v-1) matrix C.
bool ScalarSumConstraintsHold(const DsrgParams& p, const BorderPattern& border,
                              const IntMatrix& c);

}  // namespace dsrg

#endif  // DSRG_BORDER_H_
