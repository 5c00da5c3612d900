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

#include "dsrg/stage1.h"

#include <algorithm>

#include "dsrg/error.h"

namespace dsrg {

struct Stage1Search::State {
  std::array<Row, kMaxBlocks> m{};
  // Column remainders still to be placed in B-rows (in) and other rows (out).
  std::array<int, kMaxBlocks> rem_in{};
  std::array<int, kMaxBlocks> rem_out{};
  // known[i][j] = shift * M(i, j) + sum_{k <= r} M(i, k) M(k, j) for the
  // assigned rows i <= r. Rows i < r only see row r after Commit().
  std::array<std::array<int, kMaxBlocks>, kMaxBlocks> known{};
};

Stage1Search::Stage1Search(Stage1Problem problem)
    : problem_(std::move(problem)) {
  const int n = problem_.n;
  if (n <= 0 || n > kMaxBlocks) {
    throw Error(ErrorCode::kTooLarge,
                "stage-1 search supports 1..16 blocks, got " +
                    std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) target_[i][j] = problem_.target(i, j);
  }
  const SumConstraints& sums = problem_.sums;
  candidates_.resize(n);
  for (int r = 0; r < n; ++r) {
    Row row{};
    // Odometer over the entries of row r, lexicographic.
    std::function<void(int, int64_t, int64_t)> gen = [&](int j, int64_t in,
                                                         int64_t out) {
      if (in > sums.row_in[r] || out > sums.row_out[r]) return;
      if (j == n) {
        if (in == sums.row_in[r] && out == sums.row_out[r]) {
          candidates_[r].push_back(row);
        }
        return;
      }
      const int bound = j == r ? problem_.diag_bound : problem_.offdiag_bound;
      for (int x = 0; x <= bound; ++x) {
        row[j] = static_cast<int8_t>(x);
        if (sums.d_cols[j]) {
          gen(j + 1, in + x, out);
        } else {
          gen(j + 1, in, out + x);
        }
      }
      row[j] = 0;
    };
    gen(0, 0, 0);
  }
}

bool Stage1Search::RowAllowed(int r, const Row& row,
                              std::span<const int> restriction) const {
  const int n = problem_.n;
  for (int j = 0; j < n; ++j) {
    const size_t pos = static_cast<size_t>(r) * n + j;
    if (pos >= restriction.size()) return true;
    if (row[j] != restriction[pos]) return false;
  }
  return true;
}

bool Stage1Search::Place(State& s, int r, const Row& row) const {
  const int n = problem_.n;
  s.m[r] = row;
  for (int j = 0; j < n; ++j) {
    int acc = static_cast<int>(problem_.shift) * row[j];
    for (int k = 0; k <= r; ++k) acc += row[k] * s.m[k][j];
    s.known[r][j] = acc;
  }
  auto& rem = problem_.sums.b_rows[r] ? s.rem_in : s.rem_out;
  bool ok = true;
  for (int j = 0; j < problem_.n; ++j) {
    rem[j] -= row[j];
    ok &= rem[j] >= 0;
  }
  return ok;
}

void Stage1Search::Commit(State& s, int r, int sign) const {
  const Row& row = s.m[r];
  for (int i = 0; i < r; ++i) {
    const int w = sign * s.m[i][r];
    if (w == 0) continue;
    for (int j = 0; j < problem_.n; ++j) s.known[i][j] += w * row[j];
  }
}

void Stage1Search::Unplace(State& s, int r, const Row& row) const {
  auto& rem = problem_.sums.b_rows[r] ? s.rem_in : s.rem_out;
  for (int j = 0; j < problem_.n; ++j) rem[j] += row[j];
}

bool Stage1Search::CapacityOk(const State& s, int r) const {
  const int n = problem_.n;
  const auto& b_rows = problem_.sums.b_rows;
  for (int j = 0; j < n; ++j) {
    int cap_in = 0, cap_out = 0;
    for (int k = r + 1; k < n; ++k) {
      (b_rows[k] ? cap_in : cap_out) +=
          k == j ? problem_.diag_bound : problem_.offdiag_bound;
    }
    if (s.rem_in[j] < 0 || s.rem_out[j] < 0 || s.rem_in[j] > cap_in ||
        s.rem_out[j] > cap_out) {
      return false;
    }
  }
  return true;
}

bool Stage1Search::Feasible(const State& s, int r) const {
  const int n = problem_.n;
  const auto& b_rows = problem_.sums.b_rows;
  const int diag = problem_.diag_bound;
  const int off = problem_.offdiag_bound;

  const Row& row_r = s.m[r];
  for (int i = r; i >= 0; --i) {
    const Row& row_i = s.m[i];
    const int pending = i < r ? row_i[r] : 0;
    // Weight range of the unassigned rows per group.
    int min_in = off, max_in = 0, min_out = off, max_out = 0;
    bool any_in = false, any_out = false;
    for (int k = r + 1; k < n; ++k) {
      const int w = row_i[k];
      if (b_rows[k]) {
        any_in = true;
        min_in = std::min(min_in, w);
        max_in = std::max(max_in, w);
      } else {
        any_out = true;
        min_out = std::min(min_out, w);
        max_out = std::max(max_out, w);
      }
    }
    if (!any_in) min_in = max_in = 0;
    if (!any_out) min_out = max_out = 0;

    std::array<int, kMaxBlocks> order_in{}, order_out{};
    int n_in = -1, n_out = 0;
    for (int j = 0; j < n; ++j) {
      const int64_t need =
          target_[i][j] - s.known[i][j] - pending * row_r[j];
      const int64_t coarse_lo =
          int64_t{min_in} * s.rem_in[j] + int64_t{min_out} * s.rem_out[j];
      const int64_t coarse_hi =
          int64_t{max_in} * s.rem_in[j] + int64_t{max_out} * s.rem_out[j];
      if (need < coarse_lo || need > coarse_hi) return false;
      if (coarse_lo == coarse_hi) continue;

      // Exact range under the entry caps: heaviest weights first for the
      // upper bound, lightest first for the lower one.
      if (n_in < 0) {
        n_in = 0;
        for (int k = r + 1; k < n; ++k) {
          if (b_rows[k]) order_in[n_in++] = k;
          else order_out[n_out++] = k;
        }
        auto by_weight = [&](int a, int b) { return row_i[a] > row_i[b]; };
        std::sort(order_in.begin(), order_in.begin() + n_in, by_weight);
        std::sort(order_out.begin(), order_out.begin() + n_out, by_weight);
      }
      int64_t lo = 0, hi = 0;
      auto fill = [&](const std::array<int, kMaxBlocks>& order, int count,
                      int remaining) {
        int left = remaining;
        for (int t = 0; t < count && left > 0; ++t) {
          const int k = order[t];
          const int take = std::min(left, k == j ? diag : off);
          hi += int64_t{take} * row_i[k];
          left -= take;
        }
        left = remaining;
        for (int t = count - 1; t >= 0 && left > 0; --t) {
          const int k = order[t];
          const int take = std::min(left, k == j ? diag : off);
          lo += int64_t{take} * row_i[k];
          left -= take;
        }
      };
      fill(order_in, n_in, s.rem_in[j]);
      fill(order_out, n_out, s.rem_out[j]);
      if (need < lo || need > hi) return false;
    }
  }
  return true;
}

bool Stage1Search::Recurse(State& s, int r, std::span<const int> restriction,
                           const Sink& sink, uint64_t& count,
                           uint64_t& nodes) const {
  const int n = problem_.n;
  if (r == n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = s.m[i][j];
    }
    ++count;
    return sink(m);
  }

  // Per-entry range of row r: at most the column remainder of its group, at
  // least what the later rows of the group cannot absorb.
  const bool in_b = problem_.sums.b_rows[r];
  const auto& rem = in_b ? s.rem_in : s.rem_out;
  std::array<int, kMaxBlocks> lo{}, hi{};
  for (int j = 0; j < n; ++j) {
    int cap_after = 0;
    for (int k = r + 1; k < n; ++k) {
      if (problem_.sums.b_rows[k] == in_b) {
        cap_after += k == j ? problem_.diag_bound : problem_.offdiag_bound;
      }
    }
    const int bound = j == r ? problem_.diag_bound : problem_.offdiag_bound;
    lo[j] = std::max(0, rem[j] - cap_after);
    hi[j] = std::min(bound, rem[j]);
    const size_t pos = static_cast<size_t>(r) * n + j;
    if (pos < restriction.size()) {
      lo[j] = std::max(lo[j], restriction[pos]);
      hi[j] = std::min(hi[j], restriction[pos]);
    }
    if (lo[j] > hi[j]) return true;
  }
  // Suffix sums of the bounds split by D-column membership.
  const auto& d_cols = problem_.sums.d_cols;
  std::array<int, kMaxBlocks + 1> lo_in{}, hi_in{}, lo_out{}, hi_out{};
  for (int j = n - 1; j >= 0; --j) {
    lo_in[j] = lo_in[j + 1] + (d_cols[j] ? lo[j] : 0);
    hi_in[j] = hi_in[j + 1] + (d_cols[j] ? hi[j] : 0);
    lo_out[j] = lo_out[j + 1] + (d_cols[j] ? 0 : lo[j]);
    hi_out[j] = hi_out[j + 1] + (d_cols[j] ? 0 : hi[j]);
  }
  const int want_in = static_cast<int>(problem_.sums.row_in[r]);
  const int want_out = static_cast<int>(problem_.sums.row_out[r]);

  // Equation (r, J) splits into partial[J] = sum_{K < r} M(r, K) M(K, J),
  // fixed once the first r entries are chosen, and a rest over the
  // unassigned rows K >= r whose range follows from the entry bounds.
  const int shift = static_cast<int>(problem_.shift);
  const auto& b_rows = problem_.sums.b_rows;
  int wmax_in = 0, wmax_out = 0, wmin_in = 0, wmin_out = 0;
  bool seen_in = false, seen_out = false;
  for (int k = r; k < n; ++k) {
    if (b_rows[k]) {
      wmin_in = seen_in ? std::min(wmin_in, lo[k]) : lo[k];
      wmax_in = std::max(wmax_in, hi[k]);
      seen_in = true;
    } else {
      wmin_out = seen_out ? std::min(wmin_out, lo[k]) : lo[k];
      wmax_out = std::max(wmax_out, hi[k]);
      seen_out = true;
    }
  }
  std::array<int, kMaxBlocks> rest_lo{}, rest_hi{};
  for (int j = 0; j < n; ++j) {
    rest_lo[j] = wmin_in * s.rem_in[j] + wmin_out * s.rem_out[j] +
                 std::min(shift * lo[j], shift * hi[j]);
    rest_hi[j] = wmax_in * s.rem_in[j] + wmax_out * s.rem_out[j] +
                 std::max(shift * lo[j], shift * hi[j]);
  }
  std::array<std::array<int, kMaxBlocks>, kMaxBlocks + 1> partial{};

  Row row{};
  bool keep_going = true;
  // Odometer over row entries in lexicographic order.
  auto gen = [&](auto&& self, int j, int in, int out) -> void {
    if (!keep_going) return;
    const int need_in = want_in - in;
    const int need_out = want_out - out;
    if (need_in < lo_in[j] || need_in > hi_in[j] || need_out < lo_out[j] ||
        need_out > hi_out[j]) {
      return;
    }
    if (j <= r) {
      const auto& part = partial[j];
      for (int t = 0; t < n; ++t) {
        const int64_t need = target_[r][t] - part[t];
        if (need < rest_lo[t]) return;
        if (j == r && need > rest_hi[t]) return;
      }
    }
    if (j < r) {
      const Row& assigned = s.m[j];
      for (int x = lo[j]; x <= hi[j] && keep_going; ++x) {
        row[j] = static_cast<int8_t>(x);
        for (int t = 0; t < n; ++t) {
          partial[j + 1][t] = partial[j][t] + x * assigned[t];
        }
        if (d_cols[j]) {
          self(self, j + 1, in + x, out);
        } else {
          self(self, j + 1, in, out + x);
        }
      }
      row[j] = 0;
      return;
    }
    if (j == n) {
      ++nodes;
      Place(s, r, row);
      if (Feasible(s, r)) {
        Commit(s, r, 1);
        keep_going = Recurse(s, r + 1, restriction, sink, count, nodes);
        Commit(s, r, -1);
      }
      Unplace(s, r, row);
      return;
    }
    for (int x = lo[j]; x <= hi[j] && keep_going; ++x) {
      row[j] = static_cast<int8_t>(x);
      if (d_cols[j]) {
        self(self, j + 1, in + x, out);
      } else {
        self(self, j + 1, in, out + x);
      }
    }
    row[j] = 0;
  };
  gen(gen, 0, 0, 0);
  return keep_going;
}

namespace {

template <typename StateT>
void InitState(StateT& s, const Stage1Problem& p) {
  for (int j = 0; j < p.n; ++j) {
    s.rem_in[j] = static_cast<int>(p.sums.col_in[j]);
    s.rem_out[j] = static_cast<int>(p.sums.col_out[j]);
  }
}

}  // namespace

std::vector<std::vector<int>> Stage1Search::SplitTasks(
    std::span<const int> restriction) const {
  const int n = problem_.n;
  const int depth = TaskDepth();
  std::vector<std::vector<int>> tasks;
  State s;
  InitState(s, problem_);
  std::vector<int> prefix;
  if (!CapacityOk(s, -1)) return tasks;
  std::function<void(int)> walk = [&](int r) {
    if (r == depth) {
      tasks.push_back(prefix);
      return;
    }
    for (const Row& row : candidates_[r]) {
      if (!RowAllowed(r, row, restriction)) continue;
      const bool placed = Place(s, r, row);
      if (placed && CapacityOk(s, r) && Feasible(s, r)) {
        Commit(s, r, 1);
        prefix.insert(prefix.end(), row.begin(), row.begin() + n);
        walk(r + 1);
        prefix.resize(prefix.size() - n);
        Commit(s, r, -1);
      }
      Unplace(s, r, row);
    }
  };
  walk(0);
  return tasks;
}

uint64_t Stage1Search::EnumerateTask(std::span<const int> task,
                                     std::span<const int> restriction,
                                     const Sink& sink) const {
  const int n = problem_.n;
  if (task.size() % n != 0 || static_cast<int>(task.size()) > n * n) {
    throw Error(ErrorCode::kBadDimension, "task prefix must cover whole rows");
  }
  const int depth = static_cast<int>(task.size()) / n;
  State s;
  InitState(s, problem_);
  for (int r = 0; r < depth; ++r) {
    Row row{};
    for (int j = 0; j < n; ++j) row[j] = static_cast<int8_t>(task[r * n + j]);
    if (!RowAllowed(r, row, restriction)) return 0;
    if (std::find(candidates_[r].begin(), candidates_[r].end(), row) ==
        candidates_[r].end()) {
      return 0;
    }
    if (!Place(s, r, row) || !CapacityOk(s, r) || !Feasible(s, r)) return 0;
    Commit(s, r, 1);
  }
  uint64_t count = 0, nodes = 0;
  Recurse(s, depth, restriction, sink, count, nodes);
  nodes_.fetch_add(nodes, std::memory_order_relaxed);
  return count;
}

uint64_t Stage1Search::Enumerate(std::span<const int> restriction,
                                 const Sink& sink) const {
  State s;
  InitState(s, problem_);
  if (!CapacityOk(s, -1)) return 0;
  uint64_t count = 0, nodes = 0;
  Recurse(s, 0, restriction, sink, count, nodes);
  nodes_.fetch_add(nodes, std::memory_order_relaxed);
  return count;
}

}  // namespace dsrg
