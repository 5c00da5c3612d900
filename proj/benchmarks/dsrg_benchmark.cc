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
#include <random>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "dsrg/border.h"
#include "dsrg/certificate.h"
#include "dsrg/circulant.h"
#include "dsrg/floors.h"
#include "dsrg/isomorphism.h"
#include "dsrg/matrix_io.h"
#include "dsrg/run_config.h"
#include "dsrg/skeleton.h"
#include "dsrg/stage1.h"
#include "dsrg/stage2.h"
#include "dsrg/verify.h"

namespace dsrg {
namespace {

const AdjacencyMatrix& Example() {
  static const AdjacencyMatrix a =
      ParseAdjacency(ReadTextFile(DSRG_EXAMPLE_MATRIX));
  return a;
}

IntMatrix ExampleC1() {
  return EvalAtOne(Compactify(Example().ToIntMatrix().Sub(1, 1, 21, 21), 3));
}

CompactMatrix RandomCompact(int n, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(0, 3);
  CompactMatrix out(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int64_t> c(m);
      for (auto& x : c) x = coeff(rng);
      out.set(i, j, CycPoly(m, c));
    }
  }
  return out;
}

void BM_CompactMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const CompactMatrix a = RandomCompact(7, static_cast<int>(state.range(0)), rng);
  const CompactMatrix b = RandomCompact(7, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(CompactMul(a, b));
}
BENCHMARK(BM_CompactMul)->Arg(3)->Arg(8);

void BM_VerifyMatrixEquations(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(VerifyMatrixEquations(Example(), kPaperParams));
  }
}
BENCHMARK(BM_VerifyMatrixEquations);

void BM_VerifyPathCounts(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(VerifyPathCounts(Example(), kPaperParams));
  }
}
BENCHMARK(BM_VerifyPathCounts);

void BM_Stage1Slice(benchmark::State& state) {
  const Stage1Search search(
      MakeStage1Problem(kPaperParams, DefaultBorder(kPaperParams)));
  const std::vector<int> prefix = {2, 0, 1, 1, 0};
  for (auto _ : state) {
    uint64_t n = 0;
    search.Enumerate(prefix, [&](const IntMatrix&) {
      ++n;
      return true;
    });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_Stage1Slice)->Unit(benchmark::kMillisecond);

void BM_Stage2Lift(benchmark::State& state) {
  const Stage2Lifter lifter(kPaperParams, DefaultBorder(kPaperParams),
                            {state.range(0) != 0});
  const IntMatrix c1 = ExampleC1();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lifter.Lift(c1, [](const Stage2Solution&) {
      return true;
    }));
  }
}
BENCHMARK(BM_Stage2Lift)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FindFloorStructure(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<int> perm(22);
  for (int i = 0; i < 22; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  const AdjacencyMatrix b = Permute(Example(), perm);
  for (auto _ : state) benchmark::DoNotOptimize(FindFloorStructure(b));
}
BENCHMARK(BM_FindFloorStructure);

void BM_Certificate(benchmark::State& state) {
  const SkeletonRigging sr =
      ExtractSkeletonRigging(Example(), ConstructionFloors(22));
  for (auto _ : state) benchmark::DoNotOptimize(Canonicalize(sr));
}
BENCHMARK(BM_Certificate)->Unit(benchmark::kMillisecond);

void BM_Isomorphism(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<int> perm(22);
  for (int i = 0; i < 22; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  const AdjacencyMatrix b = Permute(Example(), perm);
  for (auto _ : state) benchmark::DoNotOptimize(Isomorphism(Example(), b));
}
BENCHMARK(BM_Isomorphism);

void BM_AutomorphismCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(AutomorphismCount(Example()));
}
BENCHMARK(BM_AutomorphismCount);

}  // namespace
}  // namespace dsrg

BENCHMARK_MAIN();
