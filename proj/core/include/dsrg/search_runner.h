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

// Both search stages over task-partitioned stage-1 subtrees.
//
// Workers take tasks in order and buffer their results; the calling thread
// emits them strictly in task order, so the record stream does not depend
// on the thread count. A task is checkpointed only after all of its records
// reached the sink.

#ifndef DSRG_SEARCH_RUNNER_H_
#define DSRG_SEARCH_RUNNER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsrg/border.h"
#include "dsrg/digraph.h"
#include "dsrg/int_matrix.h"
#include "dsrg/stage2.h"

namespace dsrg {

struct SearchConfig {
  int threads = 1;
  std::string checkpoint_path;  // empty: no checkpoint
  bool resume = false;
  // Row-major prefix of C(1) entries every solution must start with.
  std::vector<int> restriction;
  // Maximum number of stage-1 solutions emitted.
  std::optional<uint64_t> limit;
  bool stage1_only = false;
  Stage2Options stage2;
  // Stop after this many newly completed tasks.
  std::optional<uint64_t> stop_after_tasks;
};

class SearchSink {
 public:
  virtual ~SearchSink() = default;
  virtual void OnStage1(const IntMatrix& c1) { (void)c1; }
  virtual void OnStage2(const Stage2Solution& lift) { (void)lift; }
  // Records of `prefix` are complete; make them durable before returning.
  virtual void OnTaskDone(const std::vector<int>& prefix) { (void)prefix; }
};

struct SearchSummary {
  uint64_t stage1_total = 0;
  uint64_t liftable = 0;
  uint64_t stage2_total = 0;
  // Stopped by the limit or the task budget before the tree was exhausted.
  bool truncated = false;
  uint64_t tasks_total = 0;
  uint64_t tasks_resumed = 0;
  uint64_t tasks_run = 0;
  uint64_t stage1_nodes = 0;
  uint64_t stage2_nodes = 0;
  double seconds = 0;
};

// Identifies everything that changes the result set.
std::string SearchFingerprint(const DsrgParams& p, const BorderPattern& border,
                              const SearchConfig& config);

// Counts include tasks restored from the checkpoint, whose records are not
// re-emitted. Throws kCheckpointCorrupt for a checkpoint that names a task
// outside this run.
SearchSummary RunSearch(const DsrgParams& p, const BorderPattern& border,
                        const SearchConfig& config, SearchSink& sink);

// First `depth` rows of `c1`, row-major.
std::vector<int> TaskPrefixOf(const IntMatrix& c1, int depth);

}  // namespace dsrg

#endif  // DSRG_SEARCH_RUNNER_H_
