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

#include "dsrg/certificate.h"

#include <algorithm>
#include <numeric>

#include "dsrg/error.h"

namespace dsrg {
namespace {

constexpr int kMaxCanonicalFloors = 10;

int Mod3(int x) { return ((x % 3) + 3) % 3; }

uint8_t TransformShifts(uint8_t mask, bool flip, int delta) {
  uint8_t out = 0;
  for (int s = 0; s < 3; ++s) {
    if ((mask >> s) & 1) out |= 1 << Mod3(flip ? -(s + delta) : s + delta);
  }
  return out;
}

FloorColor FlipColor(FloorColor c) {
  switch (c) {
    case FloorColor::kForwardCycle: return FloorColor::kBackwardCycle;
    case FloorColor::kBackwardCycle: return FloorColor::kForwardCycle;
    default: return c;
  }
}

uint8_t RiggingLabel(uint8_t mask) {
  return mask == kAllShifts ? 0 : mask;
}

class BitWriter {
 public:
  explicit BitWriter(std::vector<uint8_t>& out) : out_(out) {}
  void Put(unsigned value, int bits) {
    for (int b = bits - 1; b >= 0; --b) {
      if (used_ == 0) out_.push_back(0);
      if ((value >> b) & 1) out_.back() |= 0x80 >> used_;
      used_ = (used_ + 1) % 8;
    }
  }

 private:
  std::vector<uint8_t>& out_;
  int used_ = 0;
};

// Version, n, colours and skeleton bits of the floors in `order`.
std::vector<uint8_t> Prefix(const SkeletonRigging& sr, bool flip,
                            const std::vector<int>& order) {
  const int n = sr.n();
  std::vector<uint8_t> out;
  out.push_back(kCertificateVersion);
  out.push_back(static_cast<uint8_t>(n));
  for (int p = 0; p < n; ++p) {
    const FloorColor c = sr.colors[order[p]];
    out.push_back(static_cast<uint8_t>(flip ? FlipColor(c) : c));
  }
  BitWriter bits(out);
  for (int p = 0; p < n; ++p) bits.Put(sr.from_special[order[p]], 1);
  for (int p = 0; p < n; ++p) bits.Put(sr.to_special[order[p]], 1);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p != q) bits.Put(sr.Shifts(order[p], order[q]) == kAllShifts, 1);
    }
  }
  return out;
}

void AppendRigging(std::vector<uint8_t>& out,
                   const std::vector<uint8_t>& labels) {
  BitWriter bits(out);
  for (uint8_t l : labels) bits.Put(l, 3);
}

// Least rigging label sequence over phases of the floors in `order`
// (phase[0] = 0; a common rotation changes nothing).
std::vector<uint8_t> MinRigging(const SkeletonRigging& sr, bool flip,
                                const std::vector<int>& order,
                                std::vector<int>& best_phase) {
  const int n = sr.n();
  std::vector<std::vector<int>> cands(1, std::vector<int>(n, -1));
  if (n > 0) cands[0][0] = 0;
  std::vector<uint8_t> labels;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      const uint8_t mask = sr.Shifts(order[p], order[q]);
      // Phase-blind label: leave floor q unplaced.
      if (mask == 0 || mask == kAllShifts) {
        labels.push_back(0);
        continue;
      }
      std::vector<std::vector<int>> next;
      uint8_t best = 0xff;
      for (const auto& c : cands) {
        const int p_lo = c[p] >= 0 ? c[p] : 0, p_hi = c[p] >= 0 ? c[p] : 2;
        const int q_lo = c[q] >= 0 ? c[q] : 0, q_hi = c[q] >= 0 ? c[q] : 2;
        for (int vp = p_lo; vp <= p_hi; ++vp) {
          for (int vq = q_lo; vq <= q_hi; ++vq) {
            const uint8_t label =
                RiggingLabel(TransformShifts(mask, flip, vp - vq));
            if (label > best) continue;
            if (label < best) {
              best = label;
              next.clear();
            }
            next.push_back(c);
            next.back()[p] = vp;
            next.back()[q] = vq;
          }
        }
      }
      cands = std::move(next);
      labels.push_back(best);
    }
  }
  best_phase = cands.front();
  for (int& x : best_phase) x = std::max(x, 0);
  return labels;
}

}  // namespace

std::string Certificate::Hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

Certificate Certificate::FromHex(const std::string& hex) {
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw Error(ErrorCode::kParseError, "bad hex digit in certificate");
  };
  if (hex.size() % 2) {
    throw Error(ErrorCode::kParseError, "odd-length certificate hex");
  }
  Certificate c;
  for (size_t i = 0; i < hex.size(); i += 2) {
    c.bytes.push_back(static_cast<uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
  }
  return c;
}

FloorStructure ApplyRelabeling(const FloorStructure& fs, const Relabeling& r) {
  FloorStructure out;
  out.special = fs.special;
  const int d = r.flip ? -1 : 1;
  for (size_t p = 0; p < r.order.size(); ++p) {
    const auto& old = fs.floors[r.order[p]];
    std::array<int, 3> f{};
    for (int i = 0; i < 3; ++i) f[i] = old[Mod3(r.phase[p] + d * i)];
    out.floors.push_back(f);
  }
  return out;
}

SkeletonRigging ApplyRelabeling(const SkeletonRigging& sr,
                                const Relabeling& r) {
  const int n = sr.n();
  SkeletonRigging out;
  out.floors = ApplyRelabeling(sr.floors, r);
  out.colors.resize(n);
  out.from_special.resize(n);
  out.to_special.resize(n);
  out.shifts.assign(static_cast<size_t>(n) * n, 0);
  for (int p = 0; p < n; ++p) {
    const int f = r.order[p];
    out.colors[p] = r.flip ? FlipColor(sr.colors[f]) : sr.colors[f];
    out.from_special[p] = sr.from_special[f];
    out.to_special[p] = sr.to_special[f];
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      out.shifts[p * n + q] = TransformShifts(
          sr.Shifts(f, r.order[q]), r.flip, r.phase[p] - r.phase[q]);
    }
  }
  return out;
}

std::vector<uint8_t> Encode(const SkeletonRigging& sr) {
  const int n = sr.n();
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<uint8_t> out = Prefix(sr, false, identity);
  std::vector<uint8_t> labels;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p != q) labels.push_back(RiggingLabel(sr.Shifts(p, q)));
    }
  }
  AppendRigging(out, labels);
  return out;
}

namespace {

struct Survivors {
  std::vector<uint8_t> prefix;
  std::vector<std::pair<bool, std::vector<int>>> members;
};

Survivors MinPrefix(const SkeletonRigging& sr) {
  const int n = sr.n();
  if (n > kMaxCanonicalFloors) {
    throw Error(ErrorCode::kTooLarge, "canonical form supports at most 10 floors");
  }
  Survivors s;
  for (bool flip : {false, true}) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<uint8_t> prefix = Prefix(sr, flip, order);
      if (s.members.empty() || prefix < s.prefix) {
        s.prefix = std::move(prefix);
        s.members.clear();
        s.members.emplace_back(flip, order);
      } else if (prefix == s.prefix) {
        s.members.emplace_back(flip, order);
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return s;
}

}  // namespace

std::vector<uint8_t> SkeletonEncoding(const SkeletonRigging& sr) {
  return MinPrefix(sr).prefix;
}

CanonicalForm Canonicalize(const SkeletonRigging& sr) {
  const Survivors s = MinPrefix(sr);
  CanonicalForm best;
  std::vector<uint8_t> best_labels;
  bool have = false;
  for (const auto& [flip, order] : s.members) {
    std::vector<int> phase;
    std::vector<uint8_t> labels = MinRigging(sr, flip, order, phase);
    if (!have || labels < best_labels) {
      have = true;
      best_labels = std::move(labels);
      best.relabeling = {flip, order, phase};
    }
  }
  best.certificate.bytes = s.prefix;
  AppendRigging(best.certificate.bytes, best_labels);
  return best;
}

std::vector<int> CanonicalBijection(const SkeletonRigging& a,
                                    const CanonicalForm& ca,
                                    const SkeletonRigging& b,
                                    const CanonicalForm& cb) {
  const FloorStructure fa = ApplyRelabeling(a.floors, ca.relabeling);
  const FloorStructure fb = ApplyRelabeling(b.floors, cb.relabeling);
  std::vector<int> pi(fa.order());
  pi[fa.special] = fb.special;
  for (size_t p = 0; p < fa.floors.size(); ++p) {
    for (int i = 0; i < 3; ++i) pi[fa.floors[p][i]] = fb.floors[p][i];
  }
  return pi;
}

}  // namespace dsrg
