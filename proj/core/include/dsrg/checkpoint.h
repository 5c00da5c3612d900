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

// Append-only record of completed search subtrees.
//
//   # dsrg-checkpoint v1 <fingerprint>
//   0,1,1,0,2,0,1,1,0,2,1,1,0,0<TAB>12 3 7
//
// Each line holds a task prefix (comma-separated entries) and the counts it
// produced: stage-1 solutions, liftable ones, lifts. Lines are written with a
// single append and fsync'd, so a crash loses at most the running tasks.

#ifndef DSRG_CHECKPOINT_H_
#define DSRG_CHECKPOINT_H_

#include <cstdint>
#include <istream>
#include <set>
#include <string>
#include <vector>

namespace dsrg {

struct CheckpointEntry {
  std::vector<int> prefix;
  uint64_t stage1 = 0;
  uint64_t liftable = 0;
  uint64_t stage2 = 0;

  friend bool operator==(const CheckpointEntry&,
                         const CheckpointEntry&) = default;
};

std::string FormatCheckpointEntry(const CheckpointEntry& entry);

// Throws kCheckpointCorrupt on a missing or foreign header, malformed or
// unterminated lines, and repeated prefixes.
std::vector<CheckpointEntry> ParseCheckpoint(std::istream& in,
                                             const std::string& fingerprint);

class Checkpoint {
 public:
  // Without `resume` the file is truncated and a fresh header written. With
  // `resume` a missing file starts fresh; an existing one must match.
  Checkpoint(std::string path, std::string fingerprint, bool resume);
  ~Checkpoint();

  Checkpoint(const Checkpoint&) = delete;
  Checkpoint& operator=(const Checkpoint&) = delete;

  const std::vector<CheckpointEntry>& completed() const { return completed_; }
  bool IsCompleted(const std::vector<int>& prefix) const {
    return prefixes_.count(prefix) > 0;
  }

  // Durable before returning. Throws kIoError.
  void Append(const CheckpointEntry& entry);

 private:
  std::string path_;
  int fd_ = -1;
  std::vector<CheckpointEntry> completed_;
  std::set<std::vector<int>> prefixes_;
};

}  // namespace dsrg

#endif  // DSRG_CHECKPOINT_H_
