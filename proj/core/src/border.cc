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

#include "dsrg/border.h"

#include "dsrg/error.h"

namespace dsrg {

namespace {

std::string Bits(const std::vector<bool>& bits) {
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

std::vector<bool> ParseBits(const std::string& s) {
  std::vector<bool> out;
  for (char ch : s) {
    if (ch != '0' && ch != '1') {
      throw Error(ErrorCode::kParseError, "border string must be 0/1: " + s);
    }
    out.push_back(ch == '1');
  }
  return out;
}

int Popcount(const std::vector<bool>& bits) {
  int n = 0;
  for (bool b : bits) n += b;
  return n;
}

}  // namespace

BorderPattern BorderPattern::Make(const DsrgParams& p, int block_size,
                                  std::vector<bool> first_row,
                                  std::vector<bool> first_col) {
  if (block_size <= 0 || (p.v - 1) % block_size != 0) {
    throw Error(ErrorCode::kBadDimension,
                "block size must divide v - 1 = " + std::to_string(p.v - 1));
  }
  const size_t len = static_cast<size_t>(p.v - 1);
  if (first_row.size() != len || first_col.size() != len) {
    throw Error(ErrorCode::kInvalidBorder,
                "border vectors must have length v - 1");
  }
  if (Popcount(first_row) != p.k || Popcount(first_col) != p.k) {
    throw Error(ErrorCode::kInvalidBorder,
                "first row and first column must each contain k ones");
  }
  int dot = 0;
  for (size_t i = 0; i < len; ++i) dot += first_row[i] && first_col[i];
  if (dot != p.t) {
    throw Error(ErrorCode::kInvalidBorder,
                "B.D = " + std::to_string(dot) + " but t = " +
                    std::to_string(p.t));
  }
  for (size_t i = 0; i < len; ++i) {
    const size_t head = i - i % block_size;
    if (first_row[i] != first_row[head] || first_col[i] != first_col[head]) {
      throw Error(ErrorCode::kInvalidBorder,
                  "border is not constant on block " +
                      std::to_string(i / block_size));
    }
  }
  BorderPattern b;
  b.v_ = p.v;
  b.block_size_ = block_size;
  b.first_row_ = std::move(first_row);
  b.first_col_ = std::move(first_col);
  return b;
}

BorderPattern BorderPattern::FromStrings(const DsrgParams& p, int block_size,
                                         const std::string& first_row,
                                         const std::string& first_col) {
  return Make(p, block_size, ParseBits(first_row), ParseBits(first_col));
}

std::string BorderPattern::FirstRowString() const { return Bits(first_row_); }
std::string BorderPattern::FirstColString() const { return Bits(first_col_); }

BorderPattern DefaultBorder(const DsrgParams& p, int block_size) {
  const int m = block_size;
  if (m <= 0 || (p.v - 1) % m != 0 || p.k % m != 0 || p.t % m != 0) {
    throw Error(ErrorCode::kIndivisibleParameters,
                "block size " + std::to_string(m) +
                    " must divide v - 1, k and t for " + ToString(p));
  }
  const int n = (p.v - 1) / m;
  const int k_blocks = p.k / m;
  const int t_blocks = p.t / m;
  const int tail_blocks = (p.k - p.t) / m;
  if (k_blocks + tail_blocks > n) {
    throw Error(ErrorCode::kIndivisibleParameters,
                "not enough blocks for a floor-respecting border");
  }
  std::vector<bool> row(p.v - 1, false);
  std::vector<bool> col(p.v - 1, false);
  for (int b = 0; b < n; ++b) {
    const bool in_row = b < k_blocks;
    const bool in_col =
        b < t_blocks || (b >= k_blocks && b < k_blocks + tail_blocks);
    for (int i = 0; i < m; ++i) {
      row[b * m + i] = in_row;
      col[b * m + i] = in_col;
    }
  }
  return BorderPattern::Make(p, m, std::move(row), std::move(col));
}

IntMatrix HCompact(const DsrgParams& p, const BorderPattern& border) {
  const int n = border.blocks();
  IntMatrix h(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      h(i, j) = p.mu - (border.ColBlock(i) && border.RowBlock(j) ? 1 : 0);
    }
  }
  return h;
}

bool SumConstraints::SatisfiedBy(const IntMatrix& m) const {
  const int n = m.rows();
  for (int j = 0; j < n; ++j) {
    int64_t in = 0, out = 0;
    for (int i = 0; i < n; ++i) (b_rows[i] ? in : out) += m(i, j);
    if (in != col_in[j] || out != col_out[j]) return false;
  }
  for (int i = 0; i < n; ++i) {
    int64_t in = 0, out = 0;
    for (int j = 0; j < n; ++j) (d_cols[j] ? in : out) += m(i, j);
    if (in != row_in[i] || out != row_out[i]) return false;
  }
  return true;
}

bool Stage1Problem::IsSolution(const IntMatrix& m) const {
  if (m.rows() != n || m.cols() != n) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int bound = i == j ? diag_bound : offdiag_bound;
      if (m(i, j) < 0 || m(i, j) > bound) return false;
    }
  }
  if (!sums.SatisfiedBy(m)) return false;
  return m * m + shift * m == target;
}

Stage1Problem MakeStage1Problem(const DsrgParams& p,
                                const BorderPattern& border) {
  const int n = border.blocks();
  const int m = border.block_size();
  Stage1Problem out;
  out.n = n;
  out.block_size = m;
  out.shift = p.mu - p.lambda;
  out.target = int64_t{p.t - p.mu} * IntMatrix::Identity(n) +
               int64_t{m} * HCompact(p, border);
  out.diag_bound = m - 1;
  out.offdiag_bound = m;

  SumConstraints& s = out.sums;
  for (int b = 0; b < n; ++b) {
    s.b_rows.push_back(border.RowBlock(b));
    s.d_cols.push_back(border.ColBlock(b));
  }
  for (int j = 0; j < n; ++j) {
    // B C + shift B = mu J, plus column degree k.
    const int64_t in = p.mu - out.shift * border.RowBlock(j);
    s.col_in.push_back(in);
    s.col_out.push_back(p.k - border.RowBlock(j) - in);
  }
  for (int i = 0; i < n; ++i) {
    // C D + shift D = mu J, plus row degree k.
    const int64_t in = p.mu - out.shift * border.ColBlock(i);
    s.row_in.push_back(in);
    s.row_out.push_back(p.k - border.ColBlock(i) - in);
  }
  return out;
}

LiftProblem MakeLiftProblem(const DsrgParams& p, const BorderPattern& border) {
  const int n = border.blocks();
  const int m = border.block_size();
  const IntMatrix h = HCompact(p, border);
  LiftProblem out;
  out.n = n;
  out.block_size = m;
  out.shift = p.mu - p.lambda;
  out.target = CompactMatrix(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      CycPoly entry = PolyScale(h(i, j), CycPoly::AllOnes(m));
      if (i == j) entry = entry + PolyScale(p.t - p.mu, CycPoly::One(m));
      out.target.set(i, j, std::move(entry));
    }
  }
  return out;
}

AdjacencyMatrix AssembleAdjacency(const BorderPattern& border,
                                  const CompactMatrix& cx) {
  if (cx.n() != border.blocks() || cx.modulus() != border.block_size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "compact matrix does not match the border");
  }
  const int v = border.v();
  AdjacencyMatrix a(v);
  for (int i = 0; i < v - 1; ++i) {
    if (border.first_row()[i]) a.Set(0, i + 1, true);
    if (border.first_col()[i]) a.Set(i + 1, 0, true);
  }
  const IntMatrix c = Expand(cx);
  for (int i = 0; i < v - 1; ++i) {
    for (int j = 0; j < v - 1; ++j) {
      const int64_t x = c(i, j);
      if (x != 0 && x != 1) {
        throw Error(ErrorCode::kParseError, "compact matrix is not binary");
      }
      if (x) a.Set(i + 1, j + 1, true);
    }
  }
  return a;
}

bool ScalarSumConstraintsHold(const DsrgParams& p, const BorderPattern& border,
                              const IntMatrix& c) {
  const int w = p.v - 1;
  if (c.rows() != w || c.cols() != w) {
    throw Error(ErrorCode::kDimensionMismatch, "C must be (v-1) x (v-1)");
  }
  const int64_t shift = p.mu - p.lambda;
  const auto& b = border.first_row();
  const auto& d = border.first_col();
  for (int j = 0; j < w; ++j) {
    int64_t in = 0, out = 0;
    for (int i = 0; i < w; ++i) (b[i] ? in : out) += c(i, j);
    if (in != p.mu - shift * b[j]) return false;
    if (in + out + b[j] != p.k) return false;
  }
  for (int i = 0; i < w; ++i) {
    int64_t in = 0, out = 0;
    for (int j = 0; j < w; ++j) (d[j] ? in : out) += c(i, j);
    if (in != p.mu - shift * d[i]) return false;
    if (in + out + d[i] != p.k) return false;
  }
  return true;
}

}  // namespace dsrg
