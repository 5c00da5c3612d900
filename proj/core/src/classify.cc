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

#include "dsrg/classify.h"

#include <atomic>
#include <map>
#include <numeric>
#include <string>

#include "dsrg/error.h"
#include "dsrg/floors.h"
#include "dsrg/isomorphism.h"
#include "dsrg/skeleton.h"
#include "parallel.h"

namespace dsrg {
namespace {

[[noreturn]] void Disagree(const std::string& what) {
  throw Error(ErrorCode::kCertificateOracleDisagreement, what);
}

}  // namespace

std::optional<CanonicalForm> FamilyCanonicalForm(const AdjacencyMatrix& a) {
  try {
    const FloorStructure fs = FindFloorStructure(a);
    return Canonicalize(ExtractSkeletonRigging(a, fs));
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kNoZ3Structure:
      case ErrorCode::kIllegalFloorInterior:
      case ErrorCode::kNotShiftInvariant:
      case ErrorCode::kTooLarge:
        return std::nullopt;
      default:
        throw;
    }
  }
}

Classification Classify(const std::vector<AdjacencyMatrix>& family,
                        const ClassifyOptions& options) {
  const size_t size = family.size();
  const int threads = options.threads;
  Classification out;
  std::atomic<uint64_t> oracle_calls{0};
  auto oracle = [&](const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    ++oracle_calls;
    return Isomorphism(a, b);
  };

  std::vector<std::optional<CanonicalForm>> forms(size);
  internal::ParallelFor(size, threads, [&](size_t i) {
    forms[i] = FamilyCanonicalForm(family[i]);
  });
  out.certificates.resize(size);
  for (size_t i = 0; i < size; ++i) {
    if (forms[i]) out.certificates[i] = forms[i]->certificate;
  }

  std::map<AdjacencyMatrix, int> first_seen;
  for (size_t i = 0; i < size; ++i) {
    auto [it, fresh] = first_seen.emplace(family[i], static_cast<int>(i));
    if (!fresh) out.duplicates.emplace_back(it->second, static_cast<int>(i));
  }

  // Group by certificate; members without one by the oracle.
  std::map<Certificate, int> by_certificate;
  std::vector<int> uncertified;  // class ids
  out.class_of.assign(size, -1);
  for (size_t i = 0; i < size; ++i) {
    int id = -1;
    if (forms[i]) {
      auto it = by_certificate.find(forms[i]->certificate);
      if (it != by_certificate.end()) id = it->second;
    } else {
      for (int c : uncertified) {
        if (oracle(family[i], family[out.classes[c].representative])) {
          id = c;
          break;
        }
      }
    }
    if (id < 0) {
      id = static_cast<int>(out.classes.size());
      IsoClass cls;
      cls.id = id;
      cls.representative = static_cast<int>(i);
      cls.certificate = out.certificates[i];
      out.classes.push_back(std::move(cls));
      if (forms[i]) {
        by_certificate.emplace(forms[i]->certificate, id);
      } else {
        uncertified.push_back(id);
      }
    }
    out.classes[id].members.push_back(static_cast<int>(i));
    out.class_of[i] = id;
  }

  // Within classes: every member onto its representative.
  for (IsoClass& cls : out.classes) {
    cls.bijections.resize(cls.members.size());
  }
  std::vector<std::pair<int, int>> jobs;
  for (const IsoClass& cls : out.classes) {
    for (size_t k = 0; k < cls.members.size(); ++k) {
      jobs.emplace_back(cls.id, static_cast<int>(k));
    }
  }
  internal::ParallelFor(jobs.size(), threads, [&](size_t j) {
    IsoClass& cls = out.classes[jobs[j].first];
    const int member = cls.members[jobs[j].second];
    const AdjacencyMatrix& rep = family[cls.representative];
    if (member == cls.representative) {
      std::vector<int> id(rep.order());
      std::iota(id.begin(), id.end(), 0);
      cls.bijections[jobs[j].second] = std::move(id);
      return;
    }
    auto pi = oracle(family[member], rep);
    if (!pi) {
      Disagree("members " + std::to_string(member) + " and " +
               std::to_string(cls.representative) +
               " share a certificate but are not isomorphic");
    }
    cls.bijections[jobs[j].second] = std::move(*pi);
  });

  // Across classes: representatives pairwise non-isomorphic.
  std::vector<std::pair<int, int>> pairs;
  for (size_t a = 0; a < out.classes.size(); ++a) {
    for (size_t b = a + 1; b < out.classes.size(); ++b) {
      pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  internal::ParallelFor(pairs.size(), threads, [&](size_t j) {
    const int a = out.classes[pairs[j].first].representative;
    const int b = out.classes[pairs[j].second].representative;
    if (oracle(family[a], family[b])) {
      Disagree("members " + std::to_string(a) + " and " + std::to_string(b) +
               " are isomorphic but have different certificates");
    }
  });

  internal::ParallelFor(out.classes.size(), threads, [&](size_t c) {
    out.classes[c].automorphism_order =
        AutomorphismCount(family[out.classes[c].representative]);
  });

  // Reversal pairing: the representative's reversal locates the partner,
  // every other member's reversal must agree.
  auto reversal_class = [&](int member) -> std::optional<int> {
    const AdjacencyMatrix rev = Reverse(family[member]);
    const auto form = FamilyCanonicalForm(rev);
    if (form) {
      auto it = by_certificate.find(form->certificate);
      if (it == by_certificate.end()) return std::nullopt;
      return it->second;
    }
    for (int c : uncertified) {
      if (oracle(rev, family[out.classes[c].representative])) return c;
    }
    return std::nullopt;
  };
  internal::ParallelFor(out.classes.size(), threads, [&](size_t c) {
    IsoClass& cls = out.classes[c];
    cls.reversal_partner = reversal_class(cls.representative);
    if (cls.reversal_partner) {
      const int partner_rep = out.classes[*cls.reversal_partner].representative;
      if (!oracle(Reverse(family[cls.representative]), family[partner_rep])) {
        Disagree("reversal of member " + std::to_string(cls.representative) +
                 " shares a certificate with member " +
                 std::to_string(partner_rep) + " but is not isomorphic");
      }
    }
  });
  std::atomic<bool> consistent{true};
  internal::ParallelFor(size, threads, [&](size_t i) {
    const IsoClass& cls = out.classes[out.class_of[i]];
    if (static_cast<int>(i) == cls.representative) return;
    if (reversal_class(static_cast<int>(i)) != cls.reversal_partner) {
      consistent = false;
    }
  });
  out.reversal_consistent = consistent;
  out.oracle_calls = oracle_calls;
  return out;
}

}  // namespace dsrg
