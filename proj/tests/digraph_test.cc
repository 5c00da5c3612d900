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

#include <random>
#include <vector>

#include "dsrg/error.h"
#include "dsrg/verify.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace dsrg {
namespace {

constexpr DsrgParams kPaper{22, 9, 6, 3, 4};

using testing::NaiveIsDsrg;
using testing::RandomRegularish;

AdjacencyMatrix Symmetric(const IntMatrix& m) {
  return AdjacencyMatrix::FromIntMatrix(m);
}

TEST(DsrgParamsTest, RejectsInsaneBounds) {
  EXPECT_THROW(DsrgParams::Make(5, 5, 0, 0, 0), Error);
  EXPECT_THROW(DsrgParams::Make(5, 2, 3, 0, 0), Error);
  EXPECT_THROW(DsrgParams::Make(5, 2, 1, 2, 0), Error);
  EXPECT_THROW(DsrgParams::Make(5, 2, 1, 0, 3), Error);
  EXPECT_EQ(DsrgParams::Make(22, 9, 6, 3, 4), kPaper);
}

TEST(ComplementParamsTest, Examples) {
  EXPECT_EQ(ComplementParams(kPaper), (DsrgParams{22, 12, 9, 6, 7}));
  // v-k-1, v-2k+t-1, v-2k+mu-2, v-2k+lambda
  const DsrgParams small{6, 2, 1, 0, 1};
  const DsrgParams expected{6, 6 - 2 - 1, 6 - 4 + 1 - 1, 6 - 4 + 1 - 2,
                            6 - 4 + 0};
  EXPECT_EQ(ComplementParams(small), expected);
  EXPECT_EQ(expected, (DsrgParams{6, 3, 2, 1, 2}));
}

TEST(ComplementParamsTest, Involution) {
  for (const DsrgParams& p :
       {kPaper, DsrgParams{6, 2, 1, 0, 1}, DsrgParams{16, 6, 6, 2, 2}}) {
    EXPECT_EQ(ComplementParams(ComplementParams(p)), p);
  }
}

TEST(ComplementParamsTest, NegativeParameter) {
  try {
    ComplementParams(DsrgParams{3, 1, 0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeParameter);
  }
}

TEST(VerifyTest, PaperExamplePasses) {
  const AdjacencyMatrix a = testing::PaperExample();
  EXPECT_TRUE(VerifyMatrixEquations(a, kPaper).passed);
  EXPECT_TRUE(VerifyPathCounts(a, kPaper).passed);
  EXPECT_TRUE(NaiveIsDsrg(a, kPaper));
}

TEST(VerifyTest, DirectedTriangle) {
  const AdjacencyMatrix c3 = DirectedCycle(3);
  EXPECT_TRUE(VerifyMatrixEquations(c3, {3, 1, 0, 0, 1}).passed);
  EXPECT_TRUE(VerifyPathCounts(c3, {3, 1, 0, 0, 1}).passed);

  const VerificationReport r = VerifyPathCounts(c3, {3, 1, 1, 0, 1});
  EXPECT_FALSE(r.passed);
  ASSERT_GT(r.Count(ViolationKind::kTCount), 0);
  for (const Violation& v : r.violations) {
    if (v.kind != ViolationKind::kTCount) continue;
    EXPECT_EQ(v.expected, 1);
    EXPECT_EQ(v.actual, 0);
  }
  EXPECT_FALSE(VerifyMatrixEquations(c3, {3, 1, 1, 0, 1}).passed);
}

TEST(VerifyTest, ShrikhandeAsDigraph) {
  const AdjacencyMatrix s = Symmetric(testing::Shrikhande());
  EXPECT_TRUE(VerifyMatrixEquations(s, {16, 6, 6, 2, 2}).passed);
  EXPECT_TRUE(VerifyPathCounts(s, {16, 6, 6, 2, 2}).passed);
}

TEST(VerifyTest, WrongMuListsMuViolations) {
  const VerificationReport r =
      VerifyPathCounts(testing::PaperExample(), {22, 9, 6, 3, 5});
  EXPECT_FALSE(r.passed);
  EXPECT_GT(r.Count(ViolationKind::kMuCount), 0);
  EXPECT_NE(r.ToString().find("mu"), std::string::npos);
}

TEST(VerifyTest, DimensionMismatch) {
  try {
    VerifyPathCounts(DirectedCycle(4), {3, 1, 0, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(VerifyTest, ReportCapsPerKind) {
  const VerificationReport r = VerifyMatrixEquations(AdjacencyMatrix(22), kPaper);
  EXPECT_FALSE(r.passed);
  for (int k = 0; k < kNumViolationKinds; ++k) {
    EXPECT_LE(r.Count(static_cast<ViolationKind>(k)),
              VerificationReport::kMaxPerKind + r.suppressed[k]);
  }
  EXPECT_GT(r.suppressed[static_cast<int>(ViolationKind::kMuCount)], 0);
}

TEST(VerifyTest, EverySingleFlipOfPaperExampleFails) {
  const AdjacencyMatrix a = testing::PaperExample();
  for (int i = 0; i < 22; ++i) {
    for (int j = 0; j < 22; ++j) {
      if (i == j) continue;
      AdjacencyMatrix b = a;
      b.Set(i, j, !a.Has(i, j));
      EXPECT_FALSE(VerifyMatrixEquations(b, kPaper).passed) << i << "," << j;
      EXPECT_FALSE(VerifyPathCounts(b, kPaper).passed) << i << "," << j;
    }
  }
}

// All 6-vertex digraphs with out-degree 2 per row, checked naively.
TEST(EnumerateSmallDsrgTest, MatchesNaiveGenerateAndTest) {
  const DsrgParams p{6, 2, 1, 0, 1};
  std::vector<uint64_t> rows[6];
  for (int r = 0; r < 6; ++r) {
    for (int x = 0; x < 6; ++x) {
      for (int y = x + 1; y < 6; ++y) {
        if (x != r && y != r) rows[r].push_back((1u << x) | (1u << y));
      }
    }
  }
  std::vector<AdjacencyMatrix> naive;
  int idx[6] = {0, 0, 0, 0, 0, 0};
  for (;;) {
    AdjacencyMatrix a(6);
    for (int r = 0; r < 6; ++r) {
      for (int c = 0; c < 6; ++c) {
        if ((rows[r][idx[r]] >> c) & 1u) a.Set(r, c, true);
      }
    }
    if (NaiveIsDsrg(a, p)) naive.push_back(a);
    int r = 5;
    while (r >= 0 && ++idx[r] == static_cast<int>(rows[r].size())) idx[r--] = 0;
    if (r < 0) break;
  }
  std::vector<AdjacencyMatrix> got = EnumerateSmallDsrg(p);
  ASSERT_FALSE(got.empty());
  std::sort(naive.begin(), naive.end());
  std::vector<AdjacencyMatrix> sorted = got;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, naive);
  for (const AdjacencyMatrix& a : got) {
    EXPECT_TRUE(VerifyPathCounts(a, p).passed);
    EXPECT_TRUE(VerifyMatrixEquations(a, p).passed);
  }
}

TEST(EnumerateSmallDsrgTest, TwoCyclePairings) {
  const std::vector<AdjacencyMatrix> got = EnumerateSmallDsrg({4, 1, 1, 0, 0});
  EXPECT_EQ(got.size(), 3u);
  for (const AdjacencyMatrix& a : got) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) EXPECT_EQ(a.Has(i, j), a.Has(j, i));
    }
  }
}

TEST(EnumerateSmallDsrgTest, BothTriangles) {
  const std::vector<AdjacencyMatrix> got = EnumerateSmallDsrg({3, 1, 0, 0, 1});
  EXPECT_EQ(got.size(), 2u);
  EXPECT_NE(std::find(got.begin(), got.end(), DirectedCycle(3)), got.end());
  EXPECT_NE(std::find(got.begin(), got.end(), Reverse(DirectedCycle(3))),
            got.end());
}

TEST(EnumerateSmallDsrgTest, TooLarge) {
  try {
    EnumerateSmallDsrg({9, 2, 1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

// Verifiers agree with each other and with the naive check on random
// degree-regular-by-rows digraphs, none of which is a DSRG.
TEST(VerifyPropertyTest, OracleAgreementOnRandomDigraphs) {
  std::mt19937_64 rng(99);
  const DsrgParams p{6, 2, 1, 0, 1};
  int checked = 0;
  while (checked < 50) {
    const AdjacencyMatrix a = RandomRegularish(6, 2, rng);
    if (NaiveIsDsrg(a, p)) continue;
    ++checked;
    EXPECT_FALSE(VerifyMatrixEquations(a, p).passed);
    EXPECT_FALSE(VerifyPathCounts(a, p).passed);
  }
  for (int trial = 0; trial < 50; ++trial) {
    const AdjacencyMatrix a = RandomRegularish(22, 9, rng);
    const bool naive = NaiveIsDsrg(a, kPaper);
    EXPECT_EQ(VerifyMatrixEquations(a, kPaper).passed, naive);
    EXPECT_EQ(VerifyPathCounts(a, kPaper).passed, naive);
  }
}

TEST(ComplementTest, PaperExample) {
  const AdjacencyMatrix a = testing::PaperExample();
  const AdjacencyMatrix c = Complement(a);
  EXPECT_TRUE(VerifyMatrixEquations(c, {22, 12, 9, 6, 7}).passed);
  EXPECT_TRUE(VerifyPathCounts(c, {22, 12, 9, 6, 7}).passed);
  EXPECT_EQ(Complement(c), a);
}

TEST(ComplementTest, TriangleBecomesReverse) {
  const AdjacencyMatrix c = Complement(DirectedCycle(3));
  EXPECT_EQ(c, Reverse(DirectedCycle(3)));
  EXPECT_TRUE(IsDsrg(c, {3, 1, 0, 0, 1}));
}

TEST(ReverseTest, Examples) {
  const AdjacencyMatrix a = testing::PaperExample();
  EXPECT_TRUE(IsDsrg(Reverse(a), kPaper));
  EXPECT_EQ(Reverse(Reverse(a)), a);
  const AdjacencyMatrix s = Symmetric(testing::Shrikhande());
  EXPECT_EQ(Reverse(s), s);
  EXPECT_NE(Reverse(DirectedCycle(3)), DirectedCycle(3));
}

TEST(ReverseTest, TransposeClosureRandom) {
  std::mt19937_64 rng(4);
  for (const AdjacencyMatrix& a : EnumerateSmallDsrg({6, 2, 1, 0, 1})) {
    EXPECT_TRUE(IsDsrg(Reverse(a), {6, 2, 1, 0, 1}));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const AdjacencyMatrix a = RandomRegularish(8, 3, rng);
    EXPECT_EQ(IsDsrg(a, {8, 3, 2, 1, 1}), IsDsrg(Reverse(a), {8, 3, 2, 1, 1}));
  }
}

TEST(AdjacencyMatrixTest, DegreesAndRows) {
  const AdjacencyMatrix a = testing::PaperExample();
  for (int i = 0; i < 22; ++i) {
    EXPECT_EQ(a.OutDegree(i), 9);
    EXPECT_EQ(a.InDegree(i), 9);
  }
  EXPECT_EQ(a.EdgeCount(), 22 * 9);
  EXPECT_EQ(AdjacencyMatrix::FromRows(a.ToRows()), a);
  EXPECT_EQ(AdjacencyMatrix::FromIntMatrix(a.ToIntMatrix()), a);
}

TEST(AdjacencyMatrixTest, PermuteComposes) {
  std::mt19937_64 rng(1);
  const AdjacencyMatrix a = testing::PaperExample();
  const std::vector<int> p = testing::RandomPermutation(22, rng);
  std::vector<int> inv(22);
  for (int i = 0; i < 22; ++i) inv[p[i]] = i;
  EXPECT_EQ(Permute(Permute(a, p), inv), a);
  EXPECT_TRUE(IsDsrg(Permute(a, p), kPaper));
}

}  // namespace
}  // namespace dsrg
