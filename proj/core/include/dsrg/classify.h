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

// Isomorphism classes of a digraph family.
//
// Members are grouped by certificate. Every member is then matched to its
// class representative by the general oracle and every pair of
// representatives is confirmed non-isomorphic by it; any contradiction
// throws kCertificateOracleDisagreement. Members without a floor structure
// carry an empty certificate and are grouped by the oracle alone.

#ifndef DSRG_CLASSIFY_H_
#define DSRG_CLASSIFY_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dsrg/certificate.h"
#include "dsrg/digraph.h"

namespace dsrg {

struct IsoClass {
  int id = 0;
  int representative = 0;     // family index
  std::vector<int> members;   // family indices, ascending
  // bijections[i] maps members[i] onto the representative.
  std::vector<std::vector<int>> bijections;
  Certificate certificate;
  boost::multiprecision::cpp_int automorphism_order;
  // Class of the reversed representative, if it lies in the family.
  std::optional<int> reversal_partner;
};

struct Classification {
  std::vector<IsoClass> classes;   // ordered by first member
  std::vector<int> class_of;       // per family index
  std::vector<Certificate> certificates;
  // (first occurrence, repeat) for identical matrices.
  std::vector<std::pair<int, int>> duplicates;
  // Every member's reversal lands in its class partner's class.
  bool reversal_consistent = true;
  uint64_t oracle_calls = 0;
};

struct ClassifyOptions {
  int threads = 1;
};

// Certificate of a digraph with its floor structure found automatically;
// nullopt without one.
std::optional<CanonicalForm> FamilyCanonicalForm(const AdjacencyMatrix& a);

Classification Classify(const std::vector<AdjacencyMatrix>& family,
                        const ClassifyOptions& options = {});

}  // namespace dsrg

#endif  // DSRG_CLASSIFY_H_
