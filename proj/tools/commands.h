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

// Subcommand bodies, separated from argument parsing so tests can drive
// them. Each returns a process exit code; dsrg::Error propagates and is
// mapped by ExitCodeFor().

#ifndef DSRG_TOOLS_COMMANDS_H_
#define DSRG_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "dsrg/digraph.h"
#include "dsrg/error.h"
#include "dsrg/run_config.h"

namespace dsrg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

int ExitCodeFor(ErrorCode code);

int Verify(const std::string& matrix_path, const DsrgParams& p,
           std::ostream& out);

struct SearchOptions {
  ResolvedConfig config;
  bool resume = false;
  std::optional<uint64_t> stop_after_tasks;
};

// Records go to config.out (stdout when empty), the summary to `log`.
int Search(const SearchOptions& options, std::ostream& out, std::ostream& log);

// Classifies the stage-2 records of `input`. Class records go to `out_path`
// (stdout when empty), the table to `log`.
int Classify(const std::string& input, const std::string& out_path,
             int threads, std::ostream& out, std::ostream& log);

enum class DotKind { kSkeleton, kRigging };

// `input` is a matrix file or a JSONL file; `index` picks the record.
int ExportDot(const std::string& input, int index, DotKind kind,
              std::ostream& out);

// Writes J - I - A to `out_path` (stdout when empty); with `params`, prints
// the complement parameters to `log`.
int Complement(const std::string& matrix_path,
               const std::optional<DsrgParams>& params,
               const std::string& out_path, std::ostream& out,
               std::ostream& log);

// Square 0/1 matrix of size a multiple of m, or one more (border dropped).
int Compactify(const std::string& matrix_path, int block_size,
               std::ostream& out);

}  // namespace dsrg::cli

#endif  // DSRG_TOOLS_COMMANDS_H_
