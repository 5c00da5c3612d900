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

// Matrix text format: optional leading '#' comment lines, then v lines of
// exactly v characters from {0, 1}, newline-terminated.

#ifndef DSRG_MATRIX_IO_H_
#define DSRG_MATRIX_IO_H_

#include <string>
#include <string_view>

#include "dsrg/digraph.h"
#include "dsrg/int_matrix.h"

namespace dsrg {

// Square 0/1 matrix, diagonal unrestricted. Throws kParseError naming the
// line for empty input, bad characters and ragged or non-square shapes.
IntMatrix ParseBinaryMatrix(std::string_view text);

// As above, plus kParseError for a nonzero diagonal entry.
AdjacencyMatrix ParseAdjacency(std::string_view text);

std::string RenderMatrix(const AdjacencyMatrix& a);
// Entries must be 0 or 1.
std::string RenderMatrix(const IntMatrix& m);

// Throws kIoError.
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);

}  // namespace dsrg

#endif  // DSRG_MATRIX_IO_H_
