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

#include "dsrg/matrix_io.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "dsrg/error.h"

namespace dsrg {
namespace {

[[noreturn]] void Fail(int line, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + what);
}

}  // namespace

IntMatrix ParseBinaryMatrix(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  size_t first = 0;
  while (first < lines.size() && !lines[first].empty() &&
         lines[first][0] == '#') {
    ++first;
  }
  if (first == lines.size()) {
    throw Error(ErrorCode::kParseError, "empty matrix");
  }
  const int v = static_cast<int>(lines[first].size());
  if (v == 0) Fail(static_cast<int>(first) + 1, "empty row");
  const size_t last = first + v;
  IntMatrix m(v, v);
  for (size_t l = first; l < lines.size(); ++l) {
    const int number = static_cast<int>(l) + 1;
    const std::string_view row = lines[l];
    if (l >= last) {
      if (row.empty()) continue;
      Fail(number, "extra row; expected " + std::to_string(v) + " rows");
    }
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] != '0' && row[c] != '1') {
        Fail(number, "column " + std::to_string(c + 1) +
                         ": unexpected character '" + std::string(1, row[c]) +
                         "'");
      }
    }
    if (static_cast<int>(row.size()) != v) {
      Fail(number, "ragged row of " + std::to_string(row.size()) +
                       " entries; expected " + std::to_string(v));
    }
    for (int c = 0; c < v; ++c) m(static_cast<int>(l - first), c) = row[c] - '0';
  }
  if (lines.size() < last) {
    Fail(static_cast<int>(lines.size()),
         "matrix has " + std::to_string(lines.size() - first) + " rows; expected " +
             std::to_string(v));
  }
  return m;
}

AdjacencyMatrix ParseAdjacency(std::string_view text) {
  const IntMatrix m = ParseBinaryMatrix(text);
  for (int i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) {
      throw Error(ErrorCode::kParseError,
                  "nonzero diagonal entry at vertex " + std::to_string(i + 1));
    }
  }
  return AdjacencyMatrix::FromIntMatrix(m);
}

std::string RenderMatrix(const AdjacencyMatrix& a) {
  std::string out;
  for (const std::string& row : a.ToRows()) {
    out += row;
    out += '\n';
  }
  return out;
}

std::string RenderMatrix(const IntMatrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0 && m(i, j) != 1) {
        throw Error(ErrorCode::kParseError, "matrix is not binary");
      }
      out += static_cast<char>('0' + m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out.flush()) throw Error(ErrorCode::kIoError, "cannot write " + path);
}

}  // namespace dsrg
