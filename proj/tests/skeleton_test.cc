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


#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dsrg/certificate.h"
#include "dsrg/dot.h"
#include "dsrg/error.h"
#include "dsrg/floors.h"
#include "dsrg/isomorphism.h"
#include "dsrg/skeleton.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dsrg {
namespace {

template <typename F>
ErrorCode CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternalConsistency;
}

SkeletonRigging RandomSkeletonRigging(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> color(0, 3), mask(0, 7), bit(0, 1);
  SkeletonRigging sr;
  sr.floors = ConstructionFloors(1 + 3 * n);
  for (int f = 0; f < n; ++f) {
    sr.colors.push_back(static_cast<FloorColor>(color(rng)));
    sr.from_special.push_back(bit(rng));
    sr.to_special.push_back(bit(rng));
  }
  sr.shifts.assign(static_cast<size_t>(n) * n, 0);
  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) {
      if (f != g) sr.shifts[f * n + g] = static_cast<uint8_t>(mask(rng));
    }
  }
  return sr;
}

Relabeling RandomRelabeling(int n, std::mt19937_64& rng) {
  Relabeling r;
  r.flip = std::bernoulli_distribution(0.5)(rng);
  r.order = testing::RandomPermutation(n, rng);
  std::uniform_int_distribution<int> phase(0, 2);
  for (int p = 0; p < n; ++p) r.phase.push_back(phase(rng));
  return r;
}

// Lexicographically least image sequence over every order-3 permutation
// with one fixed point that is an automorphism, found by full enumeration.
std::optional<std::vector<int>> BruteLexLeastZ3(const AdjacencyMatrix& a) {
  const int v = a.order();
  std::vector<int> pi(v);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    int fixed = 0;
    bool order3 = true;
    for (int x = 0; x < v; ++x) {
      fixed += pi[x] == x;
      order3 = order3 && pi[pi[pi[x]]] == x;
    }
    if (fixed == 1 && order3 && IsAutomorphism(a, pi)) return pi;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

FloorStructure FloorsOf(const std::vector<int>& sigma) {
  FloorStructure fs;
  std::vector<bool> seen(sigma.size(), false);
  for (int x = 0; x < static_cast<int>(sigma.size()); ++x) {
    if (seen[x]) continue;
    seen[x] = true;
    if (sigma[x] == x) {
      fs.special = x;
      continue;
    }
    fs.floors.push_back({x, sigma[x], sigma[sigma[x]]});
    seen[sigma[x]] = seen[sigma[sigma[x]]] = true;
  }
  return fs;
}

std::vector<uint8_t> BruteCertificate(const SkeletonRigging& sr) {
  const int n = sr.n();
  std::optional<std::vector<uint8_t>> best;
  for (bool flip : {false, true}) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
      int phases = 1;
      for (int p = 0; p < n; ++p) phases *= 3;
      for (int code = 0; code < phases; ++code) {
        Relabeling r{flip, order, {}};
        for (int p = 0, c = code; p < n; ++p, c /= 3) r.phase.push_back(c % 3);
        std::vector<uint8_t> e = Encode(ApplyRelabeling(sr, r));
        if (!best || e < *best) best = std::move(e);
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return *best;
}

int CountSubstring(const std::string& s, const std::string& needle) {
  int count = 0;
  for (size_t pos = s.find(needle); pos != std::string::npos;
       pos = s.find(needle, pos + 1)) {
    ++count;
  }
  return count;
}

TEST(FloorsTest, ConstructionFloors) {
  const FloorStructure fs = ConstructionFloors(22);
  EXPECT_EQ(fs.special, 0);
  ASSERT_EQ(fs.floors.size(), 7u);
  EXPECT_EQ(fs.floors[0], (std::array<int, 3>{1, 2, 3}));
  EXPECT_EQ(fs.floors[6], (std::array<int, 3>{19, 20, 21}));
  const std::vector<int> pi = fs.Permutation();
  EXPECT_EQ(pi[0], 0);
  EXPECT_EQ(pi[1], 2);
  EXPECT_EQ(pi[3], 1);
}

TEST(FloorsTest, PaperExampleUsesConstructionFloors) {
  EXPECT_EQ(FindFloorStructure(testing::PaperExample()), ConstructionFloors(22));
}

TEST(FloorsTest, EdgelessUsesConstructionFloors) {
  EXPECT_EQ(FindFloorStructure(AdjacencyMatrix(10)), ConstructionFloors(10));
}

TEST(FloorsTest, RelabeledExampleRecoversAnAutomorphism) {
  std::mt19937_64 rng(5);
  const AdjacencyMatrix a = testing::PaperExample();
  for (int trial = 0; trial < 10; ++trial) {
    const AdjacencyMatrix b = Permute(a, testing::RandomPermutation(22, rng));
    const FloorStructure fs = FindFloorStructure(b);
    EXPECT_TRUE(IsAutomorphism(b, fs.Permutation()));
    EXPECT_EQ(fs.floors.size(), 7u);
  }
}

TEST(FloorsTest, NoStructure) {
  EXPECT_EQ(CodeOf([] { FindFloorStructure(DirectedCycle(7)); }),
            ErrorCode::kNoZ3Structure);
  EXPECT_EQ(CodeOf([] { FindFloorStructure(AdjacencyMatrix(9)); }),
            ErrorCode::kNoZ3Structure);
}

TEST(FloorsPropertyTest, MatchesBruteForceOnOrderSeven) {
  std::mt19937_64 rng(17);
  int structured = 0;
  for (int trial = 0; trial < 120; ++trial) {
    AdjacencyMatrix a(7);
    if (trial % 3 == 0) {
      std::bernoulli_distribution edge(0.5);
      for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
          if (i != j && edge(rng)) a.Set(i, j, true);
        }
      }
    } else {
      a = ExpandSkeletonRigging(RandomSkeletonRigging(2, rng));
      if (trial % 3 == 2) a = Permute(a, testing::RandomPermutation(7, rng));
    }
    const FloorStructure construction = ConstructionFloors(7);
    const std::optional<std::vector<int>> brute =
        IsAutomorphism(a, construction.Permutation())
            ? std::optional(construction.Permutation())
            : BruteLexLeastZ3(a);
    if (!brute) {
      EXPECT_EQ(CodeOf([&] { FindFloorStructure(a); }),
                ErrorCode::kNoZ3Structure)
          << "trial " << trial;
      continue;
    }
    ++structured;
    EXPECT_EQ(FindFloorStructure(a), FloorsOf(*brute)) << "trial " << trial;
  }
  EXPECT_GT(structured, 60);
}

class PaperSkeletonTest : public ::testing::Test {
 protected:
  void SetUp() override {
    a_ = testing::PaperExample();
    sr_ = ExtractSkeletonRigging(a_, ConstructionFloors(22));
  }
  AdjacencyMatrix a_;
  SkeletonRigging sr_;
};

TEST_F(PaperSkeletonTest, RegressionFacts) {
  ASSERT_EQ(sr_.n(), 7);
  EXPECT_EQ(sr_.colors[0], FloorColor::kDouble);
  EXPECT_EQ(FloorColorName(sr_.colors[0]), "Double");
  EXPECT_TRUE(sr_.from_special[0]);
  EXPECT_EQ(sr_.Shifts(4, 0), 0b110);
  EXPECT_EQ(ShiftDigits(sr_.Shifts(4, 0)), "12");
}

TEST_F(PaperSkeletonTest, DegreesMatchDecomposition) {
  // Out-degree of a floor vertex: colour cycles plus one per shift.
  for (int f = 0; f < 7; ++f) {
    int deg = sr_.to_special[f];
    const int color = static_cast<int>(sr_.colors[f]);
    deg += (color & 1) + (color >> 1 & 1);
    for (int g = 0; g < 7; ++g) {
      if (g != f) deg += __builtin_popcount(sr_.Shifts(f, g));
    }
    EXPECT_EQ(deg, 9) << "floor " << f;
  }
}

TEST_F(PaperSkeletonTest, ExpansionRoundTrip) {
  EXPECT_EQ(ExpandSkeletonRigging(sr_), a_);
}

TEST_F(PaperSkeletonTest, EdgeListsPartitionShifts) {
  int complete = 0;
  for (const auto& [from, to] : sr_.SkeletonEdges()) {
    if (from > 0 && to > 0) {
      ++complete;
      EXPECT_EQ(sr_.Shifts(from - 1, to - 1), kAllShifts);
    }
  }
  int partial = 0;
  for (const RiggingEdge& e : sr_.RiggingEdges()) {
    ++partial;
    EXPECT_EQ(sr_.Shifts(e.from, e.to), e.shifts);
  }
  int nonempty = 0;
  for (int f = 0; f < 7; ++f) {
    for (int g = 0; g < 7; ++g) nonempty += f != g && sr_.Shifts(f, g) != 0;
  }
  EXPECT_EQ(complete + partial, nonempty);
}

TEST(SkeletonTest, ShiftSemantics) {
  // Edges a_i -> b_{i+1} between floors (1,2,3) and (4,5,6).
  AdjacencyMatrix a(7);
  for (int i = 0; i < 3; ++i) a.Set(1 + i, 4 + (i + 1) % 3, true);
  const SkeletonRigging sr = ExtractSkeletonRigging(a, ConstructionFloors(7));
  EXPECT_EQ(sr.Shifts(0, 1), 0b010);
  EXPECT_EQ(sr.Shifts(1, 0), 0);
  EXPECT_EQ(sr.colors[0], FloorColor::kEmpty);
}

TEST(SkeletonTest, FloorColours) {
  AdjacencyMatrix a(7);
  for (int i = 0; i < 3; ++i) a.Set(1 + i, 1 + (i + 1) % 3, true);
  for (int i = 0; i < 3; ++i) a.Set(4 + i, 4 + (i + 2) % 3, true);
  const SkeletonRigging sr = ExtractSkeletonRigging(a, ConstructionFloors(7));
  EXPECT_EQ(sr.colors[0], FloorColor::kForwardCycle);
  EXPECT_EQ(sr.colors[1], FloorColor::kBackwardCycle);
}

TEST(SkeletonTest, ExtractionErrors) {
  const FloorStructure fs = ConstructionFloors(7);
  AdjacencyMatrix inner(7);
  inner.Set(1, 2, true);
  EXPECT_EQ(CodeOf([&] { ExtractSkeletonRigging(inner, fs); }),
            ErrorCode::kIllegalFloorInterior);
  AdjacencyMatrix special(7);
  special.Set(0, 1, true);
  EXPECT_EQ(CodeOf([&] { ExtractSkeletonRigging(special, fs); }),
            ErrorCode::kNotShiftInvariant);
  AdjacencyMatrix between(7);
  between.Set(1, 4, true);
  EXPECT_EQ(CodeOf([&] { ExtractSkeletonRigging(between, fs); }),
            ErrorCode::kNotShiftInvariant);
  EXPECT_EQ(CodeOf([&] { ExtractSkeletonRigging(AdjacencyMatrix(10), fs); }),
            ErrorCode::kDimensionMismatch);
}

TEST(SkeletonPropertyTest, RandomRoundTrips) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const SkeletonRigging sr = RandomSkeletonRigging(1 + trial % 6, rng);
    const AdjacencyMatrix a = ExpandSkeletonRigging(sr);
    EXPECT_TRUE(IsAutomorphism(a, sr.floors.Permutation()));
    EXPECT_EQ(ExtractSkeletonRigging(a, sr.floors), sr);
  }
}

TEST(SkeletonPropertyTest, RelabelingMatchesReextraction) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const SkeletonRigging sr = RandomSkeletonRigging(n, rng);
    const Relabeling r = RandomRelabeling(n, rng);
    const SkeletonRigging moved = ApplyRelabeling(sr, r);
    EXPECT_EQ(moved, ExtractSkeletonRigging(ExpandSkeletonRigging(sr),
                                            ApplyRelabeling(sr.floors, r)));
  }
}

TEST(CertificateTest, EdgelessLayout) {
  const SkeletonRigging sr =
      ExtractSkeletonRigging(AdjacencyMatrix(22), ConstructionFloors(22));
  // version, n, 7 colours, 56 skeleton bits, 42 three-bit labels.
  std::vector<uint8_t> expected = {1, 7};
  expected.resize(2 + 7 + 56 / 8 + (42 * 3 + 7) / 8, 0);
  EXPECT_EQ(Encode(sr), expected);
  EXPECT_EQ(ComputeCertificate(sr).bytes, expected);
  EXPECT_EQ(SkeletonEncoding(sr),
            std::vector<uint8_t>(expected.begin(), expected.begin() + 16));
}

TEST(CertificateTest, SingleEdgeLayout) {
  // Floor 0 -> floor 1 with shift 1: label 0b010 in the first rigging slot.
  AdjacencyMatrix a(7);
  for (int i = 0; i < 3; ++i) a.Set(1 + i, 4 + (i + 1) % 3, true);
  const SkeletonRigging sr = ExtractSkeletonRigging(a, ConstructionFloors(7));
  EXPECT_EQ(Encode(sr), (std::vector<uint8_t>{1, 2, 0, 0, 0x00, 0x40}));
  // Rephasing floor 1 turns the label into shift 0, the least nonzero one.
  EXPECT_EQ(ComputeCertificate(sr).bytes,
            (std::vector<uint8_t>{1, 2, 0, 0, 0x00, 0x04}));
}

TEST(CertificateTest, HexRoundTrip) {
  const Certificate c =
      ComputeCertificate(ExtractSkeletonRigging(testing::PaperExample(),
                                                ConstructionFloors(22)));
  EXPECT_EQ(Certificate::FromHex(c.Hex()), c);
  EXPECT_EQ(c.Hex().substr(0, 4), "0107");
  EXPECT_EQ(CodeOf([] { Certificate::FromHex("abc"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { Certificate::FromHex("zz"); }), ErrorCode::kParseError);
}

TEST(CertificateTest, TooManyFloors) {
  const SkeletonRigging sr =
      ExtractSkeletonRigging(AdjacencyMatrix(34), ConstructionFloors(34));
  EXPECT_EQ(CodeOf([&] { Canonicalize(sr); }), ErrorCode::kTooLarge);
}

TEST(CertificatePropertyTest, MatchesBruteForceMinimum) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const SkeletonRigging sr = RandomSkeletonRigging(1 + trial % 4, rng);
    const CanonicalForm cf = Canonicalize(sr);
    EXPECT_EQ(cf.certificate.bytes, BruteCertificate(sr)) << "trial " << trial;
    EXPECT_EQ(Encode(ApplyRelabeling(sr, cf.relabeling)), cf.certificate.bytes);
  }
}

TEST(CertificatePropertyTest, InvariantUnderRelabeling) {
  std::mt19937_64 rng(43);
  const SkeletonRigging paper =
      ExtractSkeletonRigging(testing::PaperExample(), ConstructionFloors(22));
  const Certificate want = ComputeCertificate(paper);
  for (int trial = 0; trial < 100; ++trial) {
    const SkeletonRigging moved = ApplyRelabeling(paper, RandomRelabeling(7, rng));
    EXPECT_EQ(ComputeCertificate(moved), want) << "trial " << trial;
  }
  for (int trial = 0; trial < 50; ++trial) {
    const SkeletonRigging sr = RandomSkeletonRigging(2 + trial % 5, rng);
    EXPECT_EQ(ComputeCertificate(ApplyRelabeling(sr, RandomRelabeling(sr.n(), rng))),
              ComputeCertificate(sr));
  }
}

TEST(CertificatePropertyTest, InvariantUnderVertexPermutation) {
  std::mt19937_64 rng(47);
  const AdjacencyMatrix a = testing::PaperExample();
  const SkeletonRigging sa = ExtractSkeletonRigging(a, FindFloorStructure(a));
  const CanonicalForm ca = Canonicalize(sa);
  for (int trial = 0; trial < 20; ++trial) {
    const AdjacencyMatrix b = Permute(a, testing::RandomPermutation(22, rng));
    const SkeletonRigging sb = ExtractSkeletonRigging(b, FindFloorStructure(b));
    const CanonicalForm cb = Canonicalize(sb);
    ASSERT_EQ(cb.certificate, ca.certificate);
    EXPECT_TRUE(IsIsomorphism(a, b, CanonicalBijection(sa, ca, sb, cb)));
  }
}

TEST(CertificatePropertyTest, ReversalChangesThePaperCertificate) {
  const AdjacencyMatrix a = testing::PaperExample();
  const AdjacencyMatrix r = Reverse(a);
  EXPECT_NE(ComputeCertificate(ExtractSkeletonRigging(a, FindFloorStructure(a))),
            ComputeCertificate(ExtractSkeletonRigging(r, FindFloorStructure(r))));
}

TEST(DotTest, PaperSkeletonAndRigging) {
  const SkeletonRigging sr =
      ExtractSkeletonRigging(testing::PaperExample(), ConstructionFloors(22));
  const std::string skeleton = SkeletonDot(sr);
  EXPECT_EQ(skeleton.rfind("digraph skeleton {\n", 0), 0u);
  EXPECT_EQ(CountSubstring(skeleton, "[label="), 8);
  EXPECT_NE(skeleton.find("s [label=\"1\""), std::string::npos);
  EXPECT_NE(skeleton.find("f0 [label=\"(2,3,4)\", shape=ellipse, style=filled]"),
            std::string::npos);
  EXPECT_EQ(CountSubstring(skeleton, " -> "),
            static_cast<int>(sr.SkeletonEdges().size()));

  const std::string rigging = RiggingDot(sr);
  EXPECT_EQ(rigging.rfind("digraph rigging {\n", 0), 0u);
  EXPECT_EQ(CountSubstring(rigging, "shape="), 7);
  EXPECT_NE(rigging.find("f4 -> f0 [label=\"12\"]"), std::string::npos);
  EXPECT_EQ(CountSubstring(rigging, " -> "),
            static_cast<int>(sr.RiggingEdges().size()));
}

TEST(DotTest, Edgeless) {
  const SkeletonRigging sr =
      ExtractSkeletonRigging(AdjacencyMatrix(7), ConstructionFloors(7));
  EXPECT_EQ(CountSubstring(SkeletonDot(sr), "->"), 0);
  EXPECT_EQ(RiggingDot(sr),
            "digraph rigging {\n"
            "  f0 [label=\"(2,3,4)\", shape=ellipse, style=solid];\n"
            "  f1 [label=\"(5,6,7)\", shape=ellipse, style=solid];\n"
            "}\n");
}

TEST(DotTest, FloorLabelIsOneBased) {
  EXPECT_EQ(FloorLabel({0, 5, 9}), "(1,6,10)");
}

}  // namespace
}  // namespace dsrg
