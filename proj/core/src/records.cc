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

#include "dsrg/records.h"

#include <json.hpp>

#include "dsrg/error.h"

namespace dsrg {
namespace {

using nlohmann::json;

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kParseError, "record: " + what);
}

json MatrixToJson(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix MatrixFromJson(const json& j) {
  if (!j.is_array() || j.empty()) Bad("c1 must be a nonempty array of rows");
  const int n = static_cast<int>(j.size());
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) {
      Bad("c1 must be square");
    }
    for (int c = 0; c < n; ++c) {
      if (!j[i][c].is_number_integer()) Bad("c1 entries must be integers");
      m(i, c) = j[i][c].get<int64_t>();
    }
  }
  return m;
}

template <typename T>
std::optional<T> Field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) return std::nullopt;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    Bad(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string_view RecordKindName(RecordKind kind) {
  switch (kind) {
    case RecordKind::kStage1: return "stage1";
    case RecordKind::kStage2: return "stage2";
    case RecordKind::kClass: return "class";
  }
  return "unknown";
}

SolutionRecord Stage1Record(const IntMatrix& c1) {
  SolutionRecord r;
  r.kind = RecordKind::kStage1;
  r.c1 = c1;
  return r;
}

SolutionRecord Stage2Record(const Stage2Solution& lift) {
  SolutionRecord r;
  r.kind = RecordKind::kStage2;
  r.c1 = lift.c1;
  r.masks = lift.masks;
  r.adjacency = lift.a.ToRows();
  return r;
}

SolutionRecord ClassRecord(const IsoClass& cls) {
  SolutionRecord r;
  r.kind = RecordKind::kClass;
  r.class_id = cls.id;
  r.size = static_cast<int>(cls.members.size());
  r.representative = cls.representative;
  r.members = cls.members;
  r.certificate = cls.certificate.Hex();
  r.automorphism_order = cls.automorphism_order.str();
  r.reversal_partner = cls.reversal_partner;
  return r;
}

std::string ToJsonLine(const SolutionRecord& r) {
  json j;
  j["kind"] = RecordKindName(r.kind);
  if (r.c1) j["c1"] = MatrixToJson(*r.c1);
  if (r.masks) j["masks"] = *r.masks;
  if (r.adjacency) j["adjacency"] = *r.adjacency;
  if (r.certificate) j["certificate"] = *r.certificate;
  if (r.class_id) j["class_id"] = *r.class_id;
  if (r.size) j["size"] = *r.size;
  if (r.representative) j["representative"] = *r.representative;
  if (r.members) j["members"] = *r.members;
  if (r.automorphism_order) j["automorphism_order"] = *r.automorphism_order;
  if (r.reversal_partner) j["reversal_partner"] = *r.reversal_partner;
  return j.dump();
}

SolutionRecord ParseJsonLine(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    Bad(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) Bad("not a JSON object");
  SolutionRecord r;
  const auto kind = Field<std::string>(j, "kind");
  if (!kind) Bad("missing kind");
  if (*kind == "stage1") r.kind = RecordKind::kStage1;
  else if (*kind == "stage2") r.kind = RecordKind::kStage2;
  else if (*kind == "class") r.kind = RecordKind::kClass;
  else Bad("unknown kind '" + *kind + "'");

  if (auto it = j.find("c1"); it != j.end()) r.c1 = MatrixFromJson(*it);
  r.masks = Field<std::vector<int>>(j, "masks");
  r.adjacency = Field<std::vector<std::string>>(j, "adjacency");
  r.certificate = Field<std::string>(j, "certificate");
  r.class_id = Field<int>(j, "class_id");
  r.size = Field<int>(j, "size");
  r.representative = Field<int>(j, "representative");
  r.members = Field<std::vector<int>>(j, "members");
  r.automorphism_order = Field<std::string>(j, "automorphism_order");
  r.reversal_partner = Field<int>(j, "reversal_partner");
  if (r.adjacency) RecordAdjacency(r);
  return r;
}

std::vector<SolutionRecord> ReadJsonl(std::istream& in) {
  std::vector<SolutionRecord> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(ParseJsonLine(line));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(number) + ": " + e.message());
    }
  }
  return out;
}

AdjacencyMatrix RecordAdjacency(const SolutionRecord& r) {
  if (!r.adjacency) Bad("no adjacency field");
  const auto& rows = *r.adjacency;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) Bad("adjacency is not square");
    for (char c : rows[i]) {
      if (c != '0' && c != '1') Bad("adjacency entries must be '0' or '1'");
    }
    if (rows[i][i] != '0') Bad("adjacency has a nonzero diagonal");
  }
  return AdjacencyMatrix::FromRows(rows);
}

}  // namespace dsrg
