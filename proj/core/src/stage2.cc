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

#include "dsrg/stage2.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <utility>

#include "dsrg/error.h"
#include "dsrg/verify.h"

namespace dsrg {
namespace {

// Eight 8-bit lanes, one per coefficient. Every lane stays below 128.
constexpr uint64_t kLaneHigh = 0x8080808080808080ull;
constexpr int kLaneMax = 127;

uint64_t LaneMask(int m) {
  return m >= 8 ? ~uint64_t{0} : (uint64_t{1} << (8 * m)) - 1;
}

// Lane-wise a <= t.
bool LanesLe(uint64_t a, uint64_t t, uint64_t high) {
  return (((t | high) - a) & high) == high;
}

int Rotate(int mask, int s, int m) {
  s = ((s % m) + m) % m;
  const int full = (1 << m) - 1;
  return ((mask << s) | (mask >> (m - s))) & full;
}

}  // namespace

Stage2Lifter::Stage2Lifter(const DsrgParams& p, const BorderPattern& border,
                           Stage2Options options)
    : params_(p), border_(border), options_(options) {
  n_ = border.blocks();
  m_ = border.block_size();
  if (m_ < 1 || m_ > kMaxModulus || n_ > kMaxBlocks) {
    throw Error(ErrorCode::kTooLarge,
                "lifting supports block size 1..8 and at most 16 blocks");
  }
  shift_ = static_cast<int>(p.mu - p.lambda);
  const LiftProblem lift = MakeLiftProblem(p, border);
  // For shift < 0, C^2 = T + |s| C is solved as C^2 + |s| ~C = T + |s| 1,
  // which keeps both sides nonnegative.
  const int64_t bias = shift_ < 0 ? -shift_ : 0;
  int64_t max_target = 0;
  target_.assign(static_cast<size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      uint64_t packed = 0;
      for (int e = 0; e < m_; ++e) {
        const int64_t c = lift.target.at(i, j).coeff(e) + bias;
        max_target = std::max(max_target, c);
        // Partial sums are nonnegative, so a negative target is never met.
        if (c < 0) {
          unsatisfiable_ = true;
          continue;
        }
        packed |= static_cast<uint64_t>(c) << (8 * e);
      }
      target_[i * n_ + j] = packed;
    }
  }
  // A lane may overshoot its target by the terms of one assignment.
  if (max_target + 3 * m_ + 2 * std::abs(shift_) > kLaneMax) {
    throw Error(ErrorCode::kTooLarge,
                "target coefficients exceed the packed lane range");
  }
  const int masks = 1 << m_;
  packed_.assign(masks, 0);
  for (int a = 0; a < masks; ++a) {
    for (int e = 0; e < m_; ++e) {
      if ((a >> e) & 1) packed_[a] |= uint64_t{1} << (8 * e);
    }
  }
  product_.assign(static_cast<size_t>(masks) * masks, 0);
  for (int a = 0; a < masks; ++a) {
    for (int b = 0; b < masks; ++b) {
      uint64_t acc = 0;
      for (int e = 0; e < m_; ++e) {
        if ((a >> e) & 1) acc += packed_[Rotate(b, e, m_)];
      }
      product_[(a << m_) | b] = acc;
    }
  }
  rotate_.assign(static_cast<size_t>(masks) * m_, 0);
  for (int a = 0; a < masks; ++a) {
    for (int s = 0; s < m_; ++s) {
      rotate_[a * m_ + s] = static_cast<uint8_t>(Rotate(a, s, m_));
    }
  }
}

// One backtracking run over a fixed C(1).
struct Stage2Lifter::Search {
  const Stage2Lifter& lifter;
  const IntMatrix& c1;
  int n;
  int m;
  uint64_t high;

  std::vector<int> mask;           // row-major, -1 when unassigned
  std::vector<uint64_t> sum;       // packed partial of C^2 plus the own term
  std::vector<uint64_t> target;    // packed, row-major
  std::vector<int> events;         // assigned terms per entry, n + 1 total

  std::vector<std::pair<int, int>> order;
  std::vector<std::vector<int>> options;

  // Phase vectors (a_1..a_{n-1}, a_0 = 0) whose image agrees with the
  // assigned row-major prefix; the first `live[d]` entries of `phases` are
  // alive at depth d.
  bool canonical = false;
  std::vector<int8_t> phases;
  std::vector<size_t> live;
  int prefix = 0;

  uint64_t nodes = 0;
  std::vector<std::vector<int>> found;

  Search(const Stage2Lifter& l, const IntMatrix& c)
      : lifter(l), c1(c), n(l.n_), m(l.m_) {
    high = kLaneHigh & LaneMask(m);
    mask.assign(n * n, -1);
    sum.assign(n * n, 0);
    target = lifter.target_;
    events.assign(n * n, 0);
  }

  uint64_t Own(int msk) const {
    return static_cast<uint64_t>(std::abs(lifter.shift_)) * lifter.packed_[msk];
  }

  uint64_t Product(int a, int b) const {
    return lifter.product_[(a << m) | b];
  }

  // sign = +1 adds the terms created by assigning (i, k), -1 removes them.
  void Apply(int i, int k, int sign) {
    const int mk = mask[i * n + k];
    auto bump = [&](int idx, uint64_t v) {
      if (sign > 0) {
        sum[idx] += v;
        ++events[idx];
      } else {
        sum[idx] -= v;
        --events[idx];
      }
    };
    // C(i, k) C(k, j) into (i, j).
    for (int j = 0; j < n; ++j) {
      const int other = mask[k * n + j];
      if (other >= 0) bump(i * n + j, Product(mk, other));
    }
    // C(l, i) C(i, k) into (l, k); (i, i)(i, i) was counted above.
    for (int l = 0; l < n; ++l) {
      if (l == i && k == i) continue;
      const int other = mask[l * n + i];
      if (other >= 0) bump(l * n + k, Product(other, mk));
    }
    bump(i * n + k, Own(lifter.shift_ >= 0 ? mk : mk ^ ((1 << m) - 1)));
  }

  bool EntryOk(int idx) const {
    if (!LanesLe(sum[idx], target[idx], high)) return false;
    return events[idx] != n + 1 || sum[idx] == target[idx];
  }

  bool OkAfter(int i, int k) const {
    for (int j = 0; j < n; ++j) {
      if (!EntryOk(i * n + j)) return false;
    }
    for (int l = 0; l < n; ++l) {
      if (!EntryOk(l * n + k)) return false;
    }
    return true;
  }

  void Assign(int i, int k, int msk) {
    mask[i * n + k] = msk;
    Apply(i, k, +1);
  }

  void Unassign(int i, int k) {
    Apply(i, k, -1);
    mask[i * n + k] = -1;
  }

  // Extends the assigned row-major prefix; false if some phase image of it
  // is smaller.
  bool Advance() {
    size_t alive = live.back();
    while (prefix < n * n && mask[prefix] >= 0) {
      const int i = prefix / n, j = prefix % n;
      const int v = mask[prefix];
      size_t kept = 0;
      for (size_t c = 0; c < alive; ++c) {
        const int8_t* g = &phases[c * n];
        const int w = lifter.rotate_[v * m + ((g[i] - g[j] + m) % m)];
        if (w < v) return false;
        if (w == v) {
          if (kept != c) {
            std::swap_ranges(phases.begin() + kept * n,
                             phases.begin() + (kept + 1) * n,
                             phases.begin() + c * n);
          }
          ++kept;
        }
      }
      alive = kept;
      ++prefix;
    }
    live.push_back(alive);
    return true;
  }

  void Recurse(size_t d) {
    if (d == order.size()) {
      found.push_back(mask);
      return;
    }
    const auto [i, k] = order[d];
    for (int msk : options[d]) {
      ++nodes;
      Assign(i, k, msk);
      if (OkAfter(i, k)) {
        if (!canonical) {
          Recurse(d + 1);
        } else {
          const int saved = prefix;
          if (Advance()) {
            Recurse(d + 1);
            live.pop_back();
          }
          prefix = saved;
        }
      }
      Unassign(i, k);
    }
  }

  void Run() {
    if (lifter.unsatisfiable_) return;

    // Principal order: row s from the diagonal, then column s below it.
    std::vector<std::pair<int, int>> principal;
    for (int s = 0; s < n; ++s) {
      for (int j = s; j < n; ++j) principal.emplace_back(s, j);
      for (int i = s + 1; i < n; ++i) principal.emplace_back(i, s);
    }
    for (const auto& [i, k] : principal) {
      const int64_t e = c1(i, k);
      std::vector<int> opts;
      for (int msk = 0; msk < (1 << m); ++msk) {
        if (std::popcount(static_cast<unsigned>(msk)) != e) continue;
        if (i == k && (msk & 1)) continue;
        opts.push_back(msk);
      }
      if (opts.size() == 1) {
        Assign(i, k, opts[0]);
      } else {
        order.emplace_back(i, k);
        options.push_back(std::move(opts));
      }
    }
    for (int idx = 0; idx < n * n; ++idx) {
      if (!EntryOk(idx)) return;
    }

    canonical = !lifter.options_.all_phases && n > 1;
    if (canonical) {
      // Phase vectors with a_0 = 0; a global rotation acts trivially.
      size_t count = 1;
      for (int f = 1; f < n; ++f) {
        count *= m;
        if (count > (size_t{1} << 22)) {
          throw Error(ErrorCode::kTooLarge,
                      "phase group too large for canonical lifting; "
                      "enumerate all phases instead");
        }
      }
      phases.assign(count * n, 0);
      for (size_t c = 0; c < count; ++c) {
        size_t x = c;
        for (int f = 1; f < n; ++f) {
          phases[c * n + f] = static_cast<int8_t>(x % m);
          x /= m;
        }
      }
      live.assign(1, count);
      prefix = 0;
      if (!Advance()) return;
    }
    Recurse(0);
  }
};

std::vector<std::vector<int>> Stage2Lifter::LiftMasks(
    const IntMatrix& c1) const {
  if (c1.rows() != n_ || c1.cols() != n_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "C(1) must be " + std::to_string(n_) + "x" +
                    std::to_string(n_));
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const int64_t bound = i == j ? m_ - 1 : m_;
      if (c1(i, j) < 0 || c1(i, j) > bound) {
        throw Error(ErrorCode::kInfeasibleEntry,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") = " + std::to_string(c1(i, j)) +
                        " has no 0/1 lift");
      }
    }
  }
  Search search(*this, c1);
  search.Run();
  nodes_.fetch_add(search.nodes, std::memory_order_relaxed);
  std::sort(search.found.begin(), search.found.end());
  return std::move(search.found);
}

Stage2Solution Stage2Lifter::Assemble(const IntMatrix& c1,
                                      const std::vector<int>& masks) const {
  Stage2Solution out;
  out.c1 = c1;
  out.masks = masks;
  out.cx = CompactMatrix(n_, m_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      out.cx.set(i, j,
                 CycPoly::FromMask(m_, static_cast<unsigned>(masks[i * n_ + j])));
    }
  }
  out.a = AssembleAdjacency(border_, out.cx);
  return out;
}

uint64_t Stage2Lifter::Lift(const IntMatrix& c1, const Sink& sink) const {
  uint64_t count = 0;
  for (const std::vector<int>& masks : LiftMasks(c1)) {
    Stage2Solution sol = Assemble(c1, masks);
    if (EvalAtOne(sol.cx) != c1 || !VerifyMatrixEquations(sol.a, params_).passed ||
        !VerifyPathCounts(sol.a, params_).passed) {
      throw Error(ErrorCode::kInternalConsistency,
                  "lift failed re-verification:\n" + ToString(sol.cx));
    }
    ++count;
    if (!sink(sol)) break;
  }
  return count;
}

boost::multiprecision::cpp_int BranchCount(const IntMatrix& c1,
                                           int block_size) {
  auto binomial = [](int64_t a, int64_t b) -> boost::multiprecision::cpp_int {
    if (b < 0 || b > a) return 0;
    boost::multiprecision::cpp_int r = 1;
    for (int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  boost::multiprecision::cpp_int total = 1;
  for (int i = 0; i < c1.rows(); ++i) {
    for (int j = 0; j < c1.cols(); ++j) {
      total *= binomial(i == j ? block_size - 1 : block_size, c1(i, j));
    }
  }
  return total;
}

std::vector<std::vector<int>> PhaseImages(const std::vector<int>& masks, int n,
                                          int block_size) {
  const int m = block_size;
  std::vector<std::vector<int>> out;
  std::vector<int> phase(n, 0);
  for (;;) {
    std::vector<int> image(masks.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        image[i * n + j] = Rotate(masks[i * n + j], phase[i] - phase[j], m);
      }
    }
    out.push_back(std::move(image));
    int f = 1;
    while (f < n && ++phase[f] == m) phase[f++] = 0;
    if (f >= n) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dsrg
