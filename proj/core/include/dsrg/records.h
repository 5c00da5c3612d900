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

// JSON Lines records for search and classification output. One object per
// line; fields that do not apply are omitted.

#ifndef DSRG_RECORDS_H_
#define DSRG_RECORDS_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsrg/classify.h"
#include "dsrg/digraph.h"
#include "dsrg/int_matrix.h"
#include "dsrg/stage2.h"

namespace dsrg {

enum class RecordKind { kStage1, kStage2, kClass };

std::string_view RecordKindName(RecordKind kind);

struct SolutionRecord {
  RecordKind kind = RecordKind::kStage1;
  std::optional<IntMatrix> c1;
  std::optional<std::vector<int>> masks;          // row-major block masks
  std::optional<std::vector<std::string>> adjacency;
  std::optional<std::string> certificate;         // lowercase hex
  std::optional<int> class_id;
  // Class records.
  std::optional<int> size;
  std::optional<int> representative;              // input record index
  std::optional<std::vector<int>> members;
  std::optional<std::string> automorphism_order;  // decimal
  std::optional<int> reversal_partner;

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

SolutionRecord Stage1Record(const IntMatrix& c1);
SolutionRecord Stage2Record(const Stage2Solution& lift);
SolutionRecord ClassRecord(const IsoClass& cls);

std::string ToJsonLine(const SolutionRecord& record);

// Throws kParseError for malformed JSON, unknown kinds, wrong field types
// and adjacency rows that are not square 0/1 with a zero diagonal.
SolutionRecord ParseJsonLine(std::string_view line);

// Skips blank lines; errors carry the line number.
std::vector<SolutionRecord> ReadJsonl(std::istream& in);

// Requires the adjacency field.
AdjacencyMatrix RecordAdjacency(const SolutionRecord& record);

}  // namespace dsrg

#endif  // DSRG_RECORDS_H_
