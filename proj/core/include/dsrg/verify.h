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

#ifndef DSRG_VERIFY_H_
#define DSRG_VERIFY_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dsrg/digraph.h"

namespace dsrg {

enum class ViolationKind { kOutdegree, kIndegree, kTCount, kLambdaCount, kMuCount };
inline constexpr int kNumViolationKinds = 5;

std::string_view ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  // One vertex for degree and t violations, the ordered pair otherwise.
  std::vector<int> witness;
  int64_t expected = 0;
  int64_t actual = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// At most kMaxPerKind violations are kept per kind; the rest are counted in
// `suppressed`.
struct VerificationReport {
  static constexpr int kMaxPerKind = 16;

  bool passed = true;
  std::vector<Violation> violations;
  std::array<int64_t, kNumViolationKinds> suppressed{};

  void Add(Violation v);
  int64_t Count(ViolationKind kind) const;
  std::string ToString() const;
};

// Checks A^2 = tI + lambda A + mu (J - I - A) and AJ = JA = kJ with exact
// integer matrix arithmetic. Throws kDimensionMismatch if orders differ.
VerificationReport VerifyMatrixEquations(const AdjacencyMatrix& a,
                                         const DsrgParams& p);

// Checks degrees and the t / lambda / mu two-path counts directly from
// neighbourhood intersections (out(x) & in(y)), never through a matrix
// product.
VerificationReport VerifyPathCounts(const AdjacencyMatrix& a,
                                    const DsrgParams& p);

// True iff both verifiers pass.
bool IsDsrg(const AdjacencyMatrix& a, const DsrgParams& p);

// Every loop-free digraph of order p.v <= 8 with all out-degrees k that passes
// VerifyPathCounts, in lexicographic order of the per-row k-subsets. No
// isomorph rejection. Throws kTooLarge above the guard.
std::vector<AdjacencyMatrix> EnumerateSmallDsrg(const DsrgParams& p);

}  // namespace dsrg

#endif  // DSRG_VERIFY_H_
