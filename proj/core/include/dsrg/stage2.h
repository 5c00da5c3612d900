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

// Lifting an integer matrix M = C(1) to 0/1 polynomial blocks C(x) with
// C(x)^2 + shift C(x) = (t - mu) I + (1 + x + ... + x^{m-1}) H.
//
// Conjugating by diag(x^{a_0}, ..., x^{a_{n-1}}) rotates every floor's phase
// independently and maps lifts to lifts with the same M and border. By
// default only the lexicographically least row-major mask sequence of each
// such orbit is emitted; Stage2Options::all_phases emits every lift.

#ifndef DSRG_STAGE2_H_
#define DSRG_STAGE2_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dsrg/border.h"
#include "dsrg/circulant.h"
#include "dsrg/digraph.h"
#include "dsrg/int_matrix.h"

namespace dsrg {

struct Stage2Solution {
  IntMatrix c1;
  CompactMatrix cx{0, 1};
  // Row-major block masks, bit i = coefficient of x^i.
  std::vector<int> masks;
  AdjacencyMatrix a;
};

struct Stage2Options {
  bool all_phases = false;
};

class Stage2Lifter {
 public:
  static constexpr int kMaxModulus = 8;
  static constexpr int kMaxBlocks = 16;
  // Return false to stop.
  using Sink = std::function<bool(const Stage2Solution&)>;

  // Throws kTooLarge when the block size or coefficients exceed the packed
  // representation.
  Stage2Lifter(const DsrgParams& p, const BorderPattern& border,
               Stage2Options options = {});

  // Emits the lifts of `c1` in increasing row-major mask order, each checked
  // by both verifiers (kInternalConsistency otherwise). Throws
  // kInfeasibleEntry for entries outside [0, m] ([0, m - 1] on the diagonal).
  uint64_t Lift(const IntMatrix& c1, const Sink& sink) const;

  // Masks of every lift, same order as Lift() but without assembly.
  std::vector<std::vector<int>> LiftMasks(const IntMatrix& c1) const;

  Stage2Solution Assemble(const IntMatrix& c1,
                          const std::vector<int>& masks) const;

  const DsrgParams& params() const { return params_; }
  const BorderPattern& border() const { return border_; }
  const Stage2Options& options() const { return options_; }
  uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

 private:
  struct Search;

  DsrgParams params_;
  BorderPattern border_;
  Stage2Options options_;
  int n_ = 0;
  int m_ = 0;
  int shift_ = 0;
  bool unsatisfiable_ = false;
  std::vector<uint64_t> target_;    // packed lanes, row-major
  std::vector<uint64_t> product_;   // [a << m | b] -> packed a(x) b(x)
  std::vector<uint64_t> packed_;    // mask -> packed coefficients
  std::vector<uint8_t> rotate_;     // [mask * m + s] -> mask rotated by s
  mutable std::atomic<uint64_t> nodes_{0};
};

// Product over blocks of binomial(m, M(I, J)), binomial(m - 1, M(I, I)) on
// the diagonal.
boost::multiprecision::cpp_int BranchCount(const IntMatrix& c1, int block_size);

// Distinct images of a row-major mask matrix under all per-floor phase
// rotations, sorted.
std::vector<std::vector<int>> PhaseImages(const std::vector<int>& masks, int n,
                                          int block_size);

}  // namespace dsrg

#endif  // DSRG_STAGE2_H_
