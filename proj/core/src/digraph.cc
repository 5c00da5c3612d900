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

#include "dsrg/digraph.h"

#include <bit>

#include "dsrg/error.h"

namespace dsrg {

DsrgParams DsrgParams::Make(int v, int k, int t, int lambda, int mu) {
  if (v < 0 || k < 0 || t < 0 || lambda < 0 || mu < 0) {
    throw Error(ErrorCode::kInvalidParams, "parameters must be nonnegative");
  }
  if (!(0 < k && k < v) || t > k || lambda >= k || mu > k) {
    throw Error(ErrorCode::kInvalidParams,
                "(" + std::to_string(v) + "," + std::to_string(k) + "," +
                    std::to_string(t) + "," + std::to_string(lambda) + "," +
                    std::to_string(mu) +
                    ") violates 0<k<v, t<=k, lambda<k, mu<=k");
  }
  return DsrgParams{v, k, t, lambda, mu};
}

std::string ToString(const DsrgParams& p) {
  return "(" + std::to_string(p.v) + ", " + std::to_string(p.k) + ", " +
         std::to_string(p.t) + ", " + std::to_string(p.lambda) + ", " +
         std::to_string(p.mu) + ")";
}

DsrgParams ComplementParams(const DsrgParams& p) {
  const int k = p.v - p.k - 1;
  const int t = p.v - 2 * p.k + p.t - 1;
  const int lambda = p.v - 2 * p.k + p.mu - 2;
  const int mu = p.v - 2 * p.k + p.lambda;
  if (k < 0 || t < 0 || lambda < 0 || mu < 0) {
    throw Error(ErrorCode::kNegativeParameter,
                "complement of " + ToString(p) + " has a negative parameter");
  }
  return DsrgParams::Make(p.v, k, t, lambda, mu);
}

AdjacencyMatrix::AdjacencyMatrix(int v) : v_(v), rows_(v, 0), cols_(v, 0) {
  if (v < 0 || v > kMaxOrder) {
    throw Error(ErrorCode::kTooLarge,
                "order " + std::to_string(v) + " outside [0, 64]");
  }
}

AdjacencyMatrix AdjacencyMatrix::FromIntMatrix(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::kParseError, "matrix is not square");
  AdjacencyMatrix a(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const int64_t x = m(i, j);
      if (x != 0 && x != 1) {
        throw Error(ErrorCode::kParseError, "entry outside {0,1} at (" +
                                                std::to_string(i) + ", " +
                                                std::to_string(j) + ")");
      }
      if (x) a.Set(i, j, true);
    }
  }
  return a;
}

AdjacencyMatrix AdjacencyMatrix::FromRows(const std::vector<std::string>& rows) {
  AdjacencyMatrix a(static_cast<int>(rows.size()));
  for (int i = 0; i < a.v_; ++i) {
    if (static_cast<int>(rows[i].size()) != a.v_) {
      throw Error(ErrorCode::kParseError,
                  "row " + std::to_string(i) + " has length " +
                      std::to_string(rows[i].size()));
    }
    for (int j = 0; j < a.v_; ++j) {
      const char ch = rows[i][j];
      if (ch != '0' && ch != '1') {
        throw Error(ErrorCode::kParseError, "bad character in row " +
                                                std::to_string(i));
      }
      if (ch == '1') a.Set(i, j, true);
    }
  }
  return a;
}

int AdjacencyMatrix::OutDegree(int i) const { return std::popcount(rows_[i]); }
int AdjacencyMatrix::InDegree(int j) const { return std::popcount(cols_[j]); }

int AdjacencyMatrix::EdgeCount() const {
  int e = 0;
  for (uint64_t r : rows_) e += std::popcount(r);
  return e;
}

void AdjacencyMatrix::Set(int i, int j, bool value) {
  if (i == j && value) {
    throw Error(ErrorCode::kParseError,
                "nonzero diagonal entry at vertex " + std::to_string(i));
  }
  const uint64_t row_bit = uint64_t{1} << j;
  const uint64_t col_bit = uint64_t{1} << i;
  if (value) {
    rows_[i] |= row_bit;
    cols_[j] |= col_bit;
  } else {
    rows_[i] &= ~row_bit;
    cols_[j] &= ~col_bit;
  }
}

IntMatrix AdjacencyMatrix::ToIntMatrix() const {
  IntMatrix m(v_, v_);
  for (int i = 0; i < v_; ++i) {
    for (int j = 0; j < v_; ++j) m(i, j) = Has(i, j);
  }
  return m;
}

std::vector<std::string> AdjacencyMatrix::ToRows() const {
  std::vector<std::string> out(v_, std::string(v_, '0'));
  for (int i = 0; i < v_; ++i) {
    for (int j = 0; j < v_; ++j) {
      if (Has(i, j)) out[i][j] = '1';
    }
  }
  return out;
}

AdjacencyMatrix Complement(const AdjacencyMatrix& a) {
  AdjacencyMatrix out(a.order());
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) {
      if (i != j && !a.Has(i, j)) out.Set(i, j, true);
    }
  }
  return out;
}

AdjacencyMatrix Reverse(const AdjacencyMatrix& a) {
  AdjacencyMatrix out(a.order());
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) {
      if (a.Has(i, j)) out.Set(j, i, true);
    }
  }
  return out;
}

AdjacencyMatrix Permute(const AdjacencyMatrix& a,
                        const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != a.order()) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation size differs");
  }
  AdjacencyMatrix out(a.order());
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) {
      if (a.Has(i, j)) out.Set(perm[i], perm[j], true);
    }
  }
  return out;
}

AdjacencyMatrix DirectedCycle(int v) {
  AdjacencyMatrix a(v);
  for (int i = 0; i < v; ++i) a.Set(i, (i + 1) % v, true);
  return a;
}

}  // namespace dsrg
