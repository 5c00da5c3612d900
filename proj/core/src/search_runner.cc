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

#include "dsrg/search_runner.h"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "dsrg/checkpoint.h"
#include "dsrg/error.h"
#include "dsrg/stage1.h"

namespace dsrg {
namespace {

struct TaskResult {
  struct Item {
    IntMatrix c1;
    std::vector<Stage2Solution> lifts;
  };
  std::vector<Item> items;
  // False when the per-task limit cut the enumeration short.
  bool complete = true;
};

}  // namespace

std::string SearchFingerprint(const DsrgParams& p, const BorderPattern& border,
                              const SearchConfig& config) {
  std::ostringstream out;
  out << "params=" << p.v << ',' << p.k << ',' << p.t << ',' << p.lambda << ','
      << p.mu << " m=" << border.block_size()
      << " B=" << border.FirstRowString() << " D=" << border.FirstColString()
      << " restrict=";
  for (size_t i = 0; i < config.restriction.size(); ++i) {
    out << (i ? "," : "") << config.restriction[i];
  }
  out << " stage1_only=" << config.stage1_only
      << " all_phases=" << config.stage2.all_phases;
  return out.str();
}

std::vector<int> TaskPrefixOf(const IntMatrix& c1, int depth) {
  std::vector<int> prefix;
  for (int i = 0; i < depth; ++i) {
    for (int j = 0; j < c1.cols(); ++j) {
      prefix.push_back(static_cast<int>(c1(i, j)));
    }
  }
  return prefix;
}

SearchSummary RunSearch(const DsrgParams& p, const BorderPattern& border,
                        const SearchConfig& config, SearchSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  if (config.threads < 1) {
    throw Error(ErrorCode::kInvalidParams, "thread count must be positive");
  }
  const Stage1Search stage1(MakeStage1Problem(p, border));
  std::unique_ptr<Stage2Lifter> lifter;
  if (!config.stage1_only) {
    lifter = std::make_unique<Stage2Lifter>(p, border, config.stage2);
  }
  const std::vector<std::vector<int>> tasks =
      stage1.SplitTasks(config.restriction);

  SearchSummary summary;
  summary.tasks_total = tasks.size();

  std::unique_ptr<Checkpoint> checkpoint;
  std::vector<bool> skip(tasks.size(), false);
  if (!config.checkpoint_path.empty()) {
    checkpoint = std::make_unique<Checkpoint>(
        config.checkpoint_path, SearchFingerprint(p, border, config),
        config.resume);
    std::set<std::vector<int>> known(tasks.begin(), tasks.end());
    for (const CheckpointEntry& e : checkpoint->completed()) {
      if (!known.count(e.prefix)) {
        throw Error(ErrorCode::kCheckpointCorrupt,
                    "checkpoint names a task outside this run: " +
                        FormatCheckpointEntry(e));
      }
      summary.stage1_total += e.stage1;
      summary.liftable += e.liftable;
      summary.stage2_total += e.stage2;
      ++summary.tasks_resumed;
    }
    for (size_t i = 0; i < tasks.size(); ++i) {
      skip[i] = checkpoint->IsCompleted(tasks[i]);
    }
  }

  uint64_t budget = UINT64_MAX;
  if (config.limit) {
    budget = *config.limit >= summary.stage1_total
                 ? *config.limit - summary.stage1_total
                 : 0;
  }

  std::mutex mu;
  std::condition_variable ready;
  std::vector<std::unique_ptr<TaskResult>> results(tasks.size());
  std::exception_ptr failure;
  std::atomic<bool> stop{false};
  std::atomic<size_t> next{0};

  auto run_task = [&](size_t index) {
    auto result = std::make_unique<TaskResult>();
    uint64_t found = 0;
    const std::span<const int> task(tasks[index]);
    stage1.EnumerateTask(task, config.restriction, [&](const IntMatrix& m) {
      if (found == budget) {
        result->complete = false;
        return false;
      }
      ++found;
      TaskResult::Item item{m, {}};
      if (lifter) {
        lifter->Lift(m, [&](const Stage2Solution& s) {
          item.lifts.push_back(s);
          return !stop.load(std::memory_order_relaxed);
        });
      }
      result->items.push_back(std::move(item));
      return !stop.load(std::memory_order_relaxed);
    });
    return result;
  };

  auto worker = [&]() {
    for (;;) {
      if (stop.load()) return;
      const size_t index = next.fetch_add(1);
      if (index >= tasks.size()) return;
      if (skip[index]) continue;
      std::unique_ptr<TaskResult> result;
      try {
        result = run_task(index);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        ready.notify_all();
        return;
      }
      std::lock_guard<std::mutex> lock(mu);
      results[index] = std::move(result);
      ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (int i = 0; i < config.threads; ++i) pool.emplace_back(worker);

  uint64_t newly_done = 0;
  try {
    for (size_t index = 0; index < tasks.size(); ++index) {
      if (skip[index]) continue;
      if (config.stop_after_tasks && newly_done == *config.stop_after_tasks) {
        summary.truncated = true;
        break;
      }
      if (budget == 0) {
        summary.truncated = true;
        break;
      }
      std::unique_ptr<TaskResult> result;
      {
        std::unique_lock<std::mutex> lock(mu);
        ready.wait(lock, [&] { return results[index] || failure; });
        if (failure) break;
        result = std::move(results[index]);
      }
      bool whole = result->complete;
      uint64_t s1 = 0, lifted = 0, s2 = 0;
      for (const TaskResult::Item& item : result->items) {
        if (budget == 0) {
          whole = false;
          break;
        }
        --budget;
        sink.OnStage1(item.c1);
        ++s1;
        if (!item.lifts.empty()) ++lifted;
        for (const Stage2Solution& s : item.lifts) {
          sink.OnStage2(s);
          ++s2;
        }
      }
      summary.stage1_total += s1;
      summary.liftable += lifted;
      summary.stage2_total += s2;
      if (!whole) {
        summary.truncated = true;
        break;
      }
      sink.OnTaskDone(tasks[index]);
      if (checkpoint) checkpoint->Append({tasks[index], s1, lifted, s2});
      ++summary.tasks_run;
      ++newly_done;
    }
  } catch (...) {
    stop = true;
    for (std::thread& t : pool) t.join();
    throw;
  }
  stop = true;
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  summary.stage1_nodes = stage1.nodes();
  if (lifter) summary.stage2_nodes = lifter->nodes();
  summary.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return summary;
}

}  // namespace dsrg
