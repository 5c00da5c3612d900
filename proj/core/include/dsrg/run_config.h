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

// Run configuration from a key=value file and command-line flags.
//
//   # comment
//   params = 22 9 6 3 4
//   block_size = 3
//   border_row = 111111111000000000000
//   border_col = 111111000111000000000
//   threads = 8
//   checkpoint = run.ckpt
//   out = run.jsonl
//   limit = 100
//   subtree = 0,1,1
//   stage1_only = false
//   all_phases = false

#ifndef DSRG_RUN_CONFIG_H_
#define DSRG_RUN_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsrg/border.h"
#include "dsrg/digraph.h"

namespace dsrg {

inline constexpr char kThreadsEnvVar[] = "DSRG_THREADS";

// Unset fields fall through to the next source.
struct RunConfig {
  std::optional<DsrgParams> params;
  std::optional<int> block_size;
  std::optional<std::string> border_row;
  std::optional<std::string> border_col;
  std::optional<int> threads;
  std::optional<std::string> checkpoint;
  std::optional<std::string> out;
  std::optional<uint64_t> limit;
  std::optional<std::vector<int>> subtree;
  std::optional<bool> stage1_only;
  std::optional<bool> all_phases;
};

// "v k t lambda mu", whitespace or comma separated. Throws kParseError or
// the DsrgParams validation error.
DsrgParams ParseParams(std::string_view text);
// "0,1,2" (empty allowed). Throws kParseError.
std::vector<int> ParseIntList(std::string_view text);

// Throws kParseError naming the line for unknown keys and bad values.
RunConfig ParseRunConfig(std::string_view text);

// Fields set in `flags` win over `file`.
RunConfig MergeRunConfig(const RunConfig& file, const RunConfig& flags);

inline constexpr DsrgParams kPaperParams{22, 9, 6, 3, 4};

struct ResolvedConfig {
  DsrgParams params = kPaperParams;
  int block_size = 3;
  BorderPattern border;
  int threads = 1;
  std::string checkpoint;
  std::string out;
  std::optional<uint64_t> limit;
  std::vector<int> subtree;
  bool stage1_only = false;
  bool all_phases = false;
};

// Defaults: the (22,9,6,3,4) instance, block size 3, the default border,
// threads from DSRG_THREADS or 1.
ResolvedConfig Resolve(const RunConfig& config);

}  // namespace dsrg

#endif  // DSRG_RUN_CONFIG_H_
