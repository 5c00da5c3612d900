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

// Canonical byte encoding of a skeleton/rigging decomposition.
//
// Layout (version 1):
//   version, n,
//   floor colours (n bytes),
//   skeleton bits, MSB first, zero padded to a byte: special -> floor (n),
//     floor -> special (n), floor -> floor complete transitions (n x n,
//     diagonal skipped),
//   rigging labels, 3 bits each, MSB first, zero padded: n x n row-major,
//     diagonal skipped, 0 where there is no rigging edge.
//
// The certificate is the least encoding over floor permutations, per-floor
// phase rotations and the orientation flip (reversing every floor's cyclic
// order, which negates shifts and swaps the two cycle colours).

#ifndef DSRG_CERTIFICATE_H_
#define DSRG_CERTIFICATE_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dsrg/floors.h"
#include "dsrg/skeleton.h"

namespace dsrg {

inline constexpr uint8_t kCertificateVersion = 1;

struct Certificate {
  std::vector<uint8_t> bytes;

  std::string Hex() const;
  static Certificate FromHex(const std::string& hex);

  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

// New floor p is old floor order[p] read as a_{phase[p]}, a_{phase[p] + d},
// a_{phase[p] + 2d} with d = -1 when flipped, +1 otherwise.
struct Relabeling {
  bool flip = false;
  std::vector<int> order;
  std::vector<int> phase;

  friend bool operator==(const Relabeling&, const Relabeling&) = default;
};

FloorStructure ApplyRelabeling(const FloorStructure& fs, const Relabeling& r);

// Same digraph, new floor structure.
SkeletonRigging ApplyRelabeling(const SkeletonRigging& sr, const Relabeling& r);

// Encoding of `sr` as it stands, no minimization.
std::vector<uint8_t> Encode(const SkeletonRigging& sr);

struct CanonicalForm {
  Certificate certificate;
  // Relabeling whose encoding is the certificate.
  Relabeling relabeling;
};

// Throws kTooLarge above 10 floors.
CanonicalForm Canonicalize(const SkeletonRigging& sr);

inline Certificate ComputeCertificate(const SkeletonRigging& sr) {
  return Canonicalize(sr).certificate;
}

// Least version, n, colour and skeleton fields alone.
std::vector<uint8_t> SkeletonEncoding(const SkeletonRigging& sr);

// Vertex bijection a -> b when both canonical forms encode equally:
// special to special, canonical floor p position i to the same.
std::vector<int> CanonicalBijection(const SkeletonRigging& a,
                                    const CanonicalForm& ca,
                                    const SkeletonRigging& b,
                                    const CanonicalForm& cb);

}  // namespace dsrg

#endif  // DSRG_CERTIFICATE_H_
