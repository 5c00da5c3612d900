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


#include "dsrg/circulant.h"

#include <random>
#include <vector>

#include "dsrg/error.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace dsrg {
namespace {

CycPoly P(int m, std::vector<int64_t> c) { return CycPoly(m, std::move(c)); }

using testing::NaiveMul;
using testing::PrintedShrikhandeCompact;
using testing::RandomCirculantBlocks;

CompactMatrix RandomCompact(int n, int m, int max_coeff, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-max_coeff, max_coeff);
  CompactMatrix out(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int64_t> c(m);
      for (auto& x : c) x = dist(rng);
      out.set(i, j, P(m, c));
    }
  }
  return out;
}

TEST(PolyFromBlockTest, OffDiagonalOnes) {
  EXPECT_EQ(PolyFromBlock(IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
            P(3, {0, 1, 1}));
}

TEST(PolyFromBlockTest, ShrikhandeBlocks) {
  const IntMatrix s = testing::Shrikhande();
  EXPECT_EQ(PolyFromBlock(s.Sub(0, 0, 4, 4)), CycPoly::Zero(4));
  EXPECT_EQ(PolyFromBlock(s.Sub(0, 4, 4, 4)), P(4, {0, 0, 1, 1}));
}

TEST(PolyFromBlockTest, RejectsNonCirculant) {
  try {
    PolyFromBlock(IntMatrix{{0, 1, 0}, {0, 0, 1}, {0, 1, 0}});
    FAIL() << "expected NotCirculant";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotCirculant);
  }
}

TEST(BlockFromPolyTest, SmallCases) {
  EXPECT_EQ(BlockFromPoly(CycPoly::Zero(3)), IntMatrix(3, 3));
  EXPECT_EQ(BlockFromPoly(CycPoly::One(3)), IntMatrix::Identity(3));
  EXPECT_EQ(BlockFromPoly(P(4, {0, 1, 0, 1})),
            (IntMatrix{{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}}));
}

TEST(BlockFromPolyTest, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int m = 1; m <= 6; ++m) {
    for (int trial = 0; trial < 20; ++trial) {
      const IntMatrix b = RandomCirculantBlocks(1, m, 5, rng);
      EXPECT_EQ(BlockFromPoly(PolyFromBlock(b)), b);
    }
  }
}

TEST(CompactifyTest, ShrikhandeMatchesPrinted) {
  EXPECT_EQ(Compactify(testing::Shrikhande(), 4), PrintedShrikhandeCompact());
}

TEST(CompactifyTest, IdentityBlocks) {
  EXPECT_EQ(Compactify(IntMatrix::Identity(6), 3), CompactMatrix::Identity(2, 3));
}

TEST(CompactifyTest, PaperExampleInteriorBlock) {
  const IntMatrix c =
      testing::PaperExample().ToIntMatrix().Sub(1, 1, 21, 21);
  const CompactMatrix cx = Compactify(c, 3);
  ASSERT_EQ(cx.n(), 7);
  EXPECT_EQ(cx.at(0, 0), P(3, {0, 1, 1}));
  EXPECT_EQ(EvalAtOne(cx)(0, 0), 2);
}

TEST(CompactifyTest, Errors) {
  try {
    Compactify(IntMatrix::Identity(7), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadDimension);
  }
  IntMatrix bad = IntMatrix::Identity(6);
  bad(3, 5) = 1;
  try {
    Compactify(bad, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotCirculant);
    EXPECT_NE(std::string(e.what()).find("block (1, 1)"), std::string::npos)
        << e.what();
  }
}

TEST(ExpandTest, Examples) {
  EXPECT_EQ(Expand(CompactMatrix::Identity(2, 3)), IntMatrix::Identity(6));
  EXPECT_EQ(Expand(PrintedShrikhandeCompact()), testing::Shrikhande());
  CompactMatrix all(2, 3);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) all.set(i, j, CycPoly::AllOnes(3));
  }
  EXPECT_EQ(Expand(all), IntMatrix::Ones(6, 6));
}

TEST(PolyArithmeticTest, Examples) {
  EXPECT_EQ(PolyMul(P(3, {0, 1, 0}), P(3, {0, 0, 1})), CycPoly::One(3));
  EXPECT_EQ(PolyMul(P(4, {1, 1, 0, 0}), P(4, {1, 0, 0, 1})), P(4, {2, 1, 0, 1}));
  EXPECT_EQ(PolyAdd(P(4, {0, 1, 1, 0}), P(4, {0, 1, 0, 1})), P(4, {0, 2, 1, 1}));
}

TEST(PolyArithmeticTest, ModulusMismatch) {
  try {
    PolyAdd(CycPoly::One(3), CycPoly::One(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kModulusMismatch);
  }
  try {
    CompactMul(CompactMatrix(2, 3), CompactMatrix(3, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(PolyArithmeticTest, RingAxiomsRandomized) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int m = 1; m <= 6; ++m) {
    auto rand_poly = [&] {
      std::vector<int64_t> c(m);
      for (auto& x : c) x = dist(rng);
      return P(m, c);
    };
    for (int trial = 0; trial < 50; ++trial) {
      const CycPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
      EXPECT_EQ(a * b, NaiveMul(a, b));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * CycPoly::One(m), a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
    }
  }
}

TEST(CompactMatrixTest, ShrikhandeSquare) {
  const CompactMatrix s = PrintedShrikhandeCompact();
  CompactMatrix expected(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      expected.set(i, j, P(4, {i == j ? 6 : 2, 2, 2, 2}));
    }
  }
  EXPECT_EQ(CompactMul(s, s), expected);
}

TEST(CompactMatrixTest, IdentityIsNeutral) {
  std::mt19937_64 rng(3);
  const CompactMatrix m = RandomCompact(5, 3, 4, rng);
  EXPECT_EQ(CompactMul(m, CompactMatrix::Identity(5, 3)), m);
  EXPECT_EQ(CompactMul(CompactMatrix::Identity(5, 3), m), m);
}

// Expand, multiply densely, compactify again.
TEST(CompactMatrixTest, HomomorphismHundredRandomPairs) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = RandomCirculantBlocks(4, 3, 2, rng);
    const IntMatrix b = RandomCirculantBlocks(4, 3, 2, rng);
    EXPECT_EQ(Compactify(a * b, 3),
              CompactMul(Compactify(a, 3), Compactify(b, 3)));
    EXPECT_EQ(Compactify(a + b, 3),
              CompactAdd(Compactify(a, 3), Compactify(b, 3)));
  }
}

TEST(CompactMatrixTest, RoundTripsAcrossModuli) {
  std::mt19937_64 rng(5);
  for (int m = 2; m <= 5; ++m) {
    for (int trial = 0; trial < 20; ++trial) {
      const IntMatrix a = RandomCirculantBlocks(3, m, 3, rng);
      EXPECT_EQ(Expand(Compactify(a, m)), a);
      const CompactMatrix c = RandomCompact(3, m, 3, rng);
      EXPECT_EQ(Compactify(Expand(c), m), c);
    }
  }
}

TEST(EvalAtOneTest, Examples) {
  EXPECT_EQ(EvalAtOne(PrintedShrikhandeCompact()),
            2 * (IntMatrix::Ones(4, 4) - IntMatrix::Identity(4)));
  EXPECT_EQ(EvalAtOne(CompactMatrix(3, 3)), IntMatrix(3, 3));
}

TEST(EvalAtOneTest, IsRingHomomorphism) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const CompactMatrix a = RandomCompact(4, 3, 3, rng);
    const CompactMatrix b = RandomCompact(4, 3, 3, rng);
    EXPECT_EQ(EvalAtOne(CompactMul(a, b)), EvalAtOne(a) * EvalAtOne(b));
  }
}

TEST(CycPolyTest, Masks) {
  EXPECT_EQ(CycPoly::FromMask(3, 0b110), P(3, {0, 1, 1}));
  EXPECT_EQ(P(3, {1, 0, 1}).ToMask(), 0b101u);
  EXPECT_EQ(ToString(P(4, {0, 1, 0, 1})), "x + x^3");
  EXPECT_EQ(ToString(CycPoly::Zero(2)), "0");
}

}  // namespace
}  // namespace dsrg
