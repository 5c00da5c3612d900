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

#include "dsrg/verify.h"

#include <algorithm>
#include <bit>
#include <sstream>

#include "dsrg/error.h"
#include "dsrg/int_matrix.h"

namespace dsrg {

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kOutdegree: return "outdegree";
    case ViolationKind::kIndegree: return "indegree";
    case ViolationKind::kTCount: return "t-count";
    case ViolationKind::kLambdaCount: return "lambda-count";
    case ViolationKind::kMuCount: return "mu-count";
  }
  return "unknown";
}

void VerificationReport::Add(Violation v) {
  passed = false;
  const int kind = static_cast<int>(v.kind);
  if (Count(v.kind) - suppressed[kind] < kMaxPerKind) {
    violations.push_back(std::move(v));
  } else {
    ++suppressed[kind];
  }
}

int64_t VerificationReport::Count(ViolationKind kind) const {
  int64_t n = suppressed[static_cast<int>(kind)];
  for (const Violation& v : violations) n += v.kind == kind;
  return n;
}

std::string VerificationReport::ToString() const {
  if (passed) return "passed\n";
  std::ostringstream os;
  os << "failed\n";
  for (const Violation& v : violations) {
    os << "  " << ViolationKindName(v.kind) << " at";
    for (int w : v.witness) os << ' ' << (w + 1);
    os << ": expected " << v.expected << ", actual " << v.actual << '\n';
  }
  for (int k = 0; k < kNumViolationKinds; ++k) {
    if (suppressed[k] > 0) {
      os << "  (" << suppressed[k] << " more "
         << ViolationKindName(static_cast<ViolationKind>(k)) << " violations)\n";
    }
  }
  return os.str();
}

namespace {

void RequireOrder(const AdjacencyMatrix& a, const DsrgParams& p) {
  if (a.order() != p.v) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix order " + std::to_string(a.order()) +
                    " but v = " + std::to_string(p.v));
  }
}

ViolationKind PairKind(const AdjacencyMatrix& a, int x, int y) {
  if (x == y) return ViolationKind::kTCount;
  return a.Has(x, y) ? ViolationKind::kLambdaCount : ViolationKind::kMuCount;
}

int64_t PairTarget(const DsrgParams& p, ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kTCount: return p.t;
    case ViolationKind::kLambdaCount: return p.lambda;
    default: return p.mu;
  }
}

}  // namespace

VerificationReport VerifyMatrixEquations(const AdjacencyMatrix& a,
                                         const DsrgParams& p) {
  RequireOrder(a, p);
  const int v = p.v;
  const IntMatrix m = a.ToIntMatrix();
  const IntMatrix identity = IntMatrix::Identity(v);
  const IntMatrix ones = IntMatrix::Ones(v, v);
  const IntMatrix square = m * m;
  const IntMatrix rhs = int64_t{p.t} * identity + int64_t{p.lambda} * m +
                        int64_t{p.mu} * (ones - identity - m);
  const IntMatrix aj = m * ones;
  const IntMatrix ja = ones * m;

  VerificationReport report;
  for (int i = 0; i < v; ++i) {
    if (aj(i, 0) != p.k) {
      report.Add({ViolationKind::kOutdegree, {i}, p.k, aj(i, 0)});
    }
  }
  for (int j = 0; j < v; ++j) {
    if (ja(0, j) != p.k) {
      report.Add({ViolationKind::kIndegree, {j}, p.k, ja(0, j)});
    }
  }
  for (int i = 0; i < v; ++i) {
    for (int j = 0; j < v; ++j) {
      if (square(i, j) == rhs(i, j)) continue;
      const ViolationKind kind = PairKind(a, i, j);
      std::vector<int> witness = i == j ? std::vector<int>{i}
                                        : std::vector<int>{i, j};
      report.Add({kind, std::move(witness), rhs(i, j), square(i, j)});
    }
  }
  return report;
}

VerificationReport VerifyPathCounts(const AdjacencyMatrix& a,
                                    const DsrgParams& p) {
  RequireOrder(a, p);
  const int v = p.v;
  VerificationReport report;
  for (int x = 0; x < v; ++x) {
    if (a.OutDegree(x) != p.k) {
      report.Add({ViolationKind::kOutdegree, {x}, p.k, a.OutDegree(x)});
    }
  }
  for (int x = 0; x < v; ++x) {
    if (a.InDegree(x) != p.k) {
      report.Add({ViolationKind::kIndegree, {x}, p.k, a.InDegree(x)});
    }
  }
  for (int x = 0; x < v; ++x) {
    for (int y = 0; y < v; ++y) {
      // Intermediaries z with x -> z -> y.
      const int paths = std::popcount(a.OutMask(x) & a.InMask(y));
      const ViolationKind kind = PairKind(a, x, y);
      const int64_t expected = PairTarget(p, kind);
      if (paths != expected) {
        std::vector<int> witness = x == y ? std::vector<int>{x}
                                          : std::vector<int>{x, y};
        report.Add({kind, std::move(witness), expected, paths});
      }
    }
  }
  return report;
}

bool IsDsrg(const AdjacencyMatrix& a, const DsrgParams& p) {
  return VerifyPathCounts(a, p).passed && VerifyMatrixEquations(a, p).passed;
}

namespace {

std::vector<uint64_t> RowChoices(int v, int k, int row) {
  std::vector<uint64_t> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << v); ++mask) {
    if (std::popcount(mask) == k && !((mask >> row) & 1u)) out.push_back(mask);
  }
  return out;
}

void EnumerateRows(const DsrgParams& p,
                   const std::vector<std::vector<uint64_t>>& choices,
                   std::vector<uint64_t>& rows, std::vector<int>& indegree,
                   std::vector<AdjacencyMatrix>& out) {
  const int row = static_cast<int>(rows.size());
  if (row == p.v) {
    AdjacencyMatrix a(p.v);
    for (int i = 0; i < p.v; ++i) {
      for (int j = 0; j < p.v; ++j) {
        if ((rows[i] >> j) & 1u) a.Set(i, j, true);
      }
    }
    if (VerifyPathCounts(a, p).passed) out.push_back(std::move(a));
    return;
  }
  for (uint64_t mask : choices[row]) {
    bool ok = true;
    for (int j = 0; j < p.v; ++j) {
      if ((mask >> j) & 1u) ok &= ++indegree[j] <= p.k;
    }
    if (ok) {
      rows.push_back(mask);
      EnumerateRows(p, choices, rows, indegree, out);
      rows.pop_back();
    }
    for (int j = 0; j < p.v; ++j) {
      if ((mask >> j) & 1u) --indegree[j];
    }
  }
}

}  // namespace

std::vector<AdjacencyMatrix> EnumerateSmallDsrg(const DsrgParams& p) {
  if (p.v > 8) {
    throw Error(ErrorCode::kTooLarge,
                "naive enumeration is limited to v <= 8, got " +
                    std::to_string(p.v));
  }
  std::vector<std::vector<uint64_t>> choices;
  for (int r = 0; r < p.v; ++r) choices.push_back(RowChoices(p.v, p.k, r));
  // Lexicographic order on subsets: compare the sorted member lists.
  for (auto& c : choices) {
    std::sort(c.begin(), c.end(), [](uint64_t a, uint64_t b) {
      while (a && b) {
        const int la = std::countr_zero(a);
        const int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
      }
      return a == 0 && b != 0;
    });
  }
  std::vector<AdjacencyMatrix> out;
  std::vector<uint64_t> rows;
  std::vector<int> indegree(p.v, 0);
  EnumerateRows(p, choices, rows, indegree, out);
  return out;
}

}  // namespace dsrg
