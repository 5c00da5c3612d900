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

// Exhaustive enumeration of the integer matrices M = C(1).
//
// Rows are assigned one at a time (row-major variable order, ascending
// values). Each row is generated entry by entry within the bounds left by
// the column remainders, and its own equation is cut off early from the
// products with the rows already assigned. After every row the column
// remainders are checked for feasibility and every equation
// (M^2 + cM)(I, J) = target(I, J) with row I already assigned is bounded:
// the unassigned part sum_{K > r} M(I, K) M(K, J) has known weights M(I, K)
// and a known column remainder split between B-rows and the other rows, so
// its exact range follows from a greedy fill.

#ifndef DSRG_STAGE1_H_
#define DSRG_STAGE1_H_

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dsrg/border.h"
#include "dsrg/int_matrix.h"

namespace dsrg {

struct Stage1Solution {
  IntMatrix c1;

  friend bool operator==(const Stage1Solution&, const Stage1Solution&) = default;
};

class Stage1Search {
 public:
  static constexpr int kMaxBlocks = 16;
  using Row = std::array<int8_t, kMaxBlocks>;
  // Return false to stop the enumeration.
  using Sink = std::function<bool(const IntMatrix&)>;

  explicit Stage1Search(Stage1Problem problem);

  const Stage1Problem& problem() const { return problem_; }
  int n() const { return problem_.n; }

  // Rows satisfying their own bounds and sums, lexicographic.
  const std::vector<Row>& Candidates(int row) const { return candidates_[row]; }

  // Number of rows fixed by a task (min(2, n)).
  int TaskDepth() const { return n() < 2 ? n() : 2; }

  // Assignments of the first TaskDepth() rows that survive propagation and
  // agree with `restriction` (a row-major prefix of entries), in
  // lexicographic order. Each task is TaskDepth() * n entries long.
  std::vector<std::vector<int>> SplitTasks(
      std::span<const int> restriction = {}) const;

  // Enumerates the solutions below one task prefix in lexicographic order.
  // Returns the number of solutions delivered to the sink.
  uint64_t EnumerateTask(std::span<const int> task,
                         std::span<const int> restriction,
                         const Sink& sink) const;

  // Serial enumeration of everything consistent with `restriction`.
  uint64_t Enumerate(std::span<const int> restriction, const Sink& sink) const;

  // Search nodes visited since construction, summed over all calls.
  uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

 private:
  struct State;

  bool RowAllowed(int r, const Row& row, std::span<const int> restriction) const;
  bool Place(State& s, int r, const Row& row) const;
  void Unplace(State& s, int r, const Row& row) const;
  // Adds (sign = 1) or removes (sign = -1) row r's terms in earlier rows.
  void Commit(State& s, int r, int sign) const;
  bool CapacityOk(const State& s, int r) const;
  bool Feasible(const State& s, int r) const;
  bool Recurse(State& s, int r, std::span<const int> restriction,
               const Sink& sink, uint64_t& count, uint64_t& nodes) const;

  Stage1Problem problem_;
  std::array<std::array<int64_t, kMaxBlocks>, kMaxBlocks> target_{};
  std::vector<std::vector<Row>> candidates_;
  mutable std::atomic<uint64_t> nodes_{0};
};

}  // namespace dsrg

#endif  // DSRG_STAGE1_H_
