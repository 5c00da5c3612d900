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

#include "commands.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

#include "dsrg/checkpoint.h"
#include "dsrg/circulant.h"
#include "dsrg/classify.h"
#include "dsrg/dot.h"
#include "dsrg/floors.h"
#include "dsrg/matrix_io.h"
#include "dsrg/records.h"
#include "dsrg/search_runner.h"
#include "dsrg/skeleton.h"
#include "dsrg/verify.h"

namespace dsrg::cli {
namespace {

class JsonlSink : public SearchSink {
 public:
  explicit JsonlSink(std::ostream& out) : out_(out) {}
  void OnStage1(const IntMatrix& c1) override {
    out_ << ToJsonLine(Stage1Record(c1)) << '\n';
  }
  void OnStage2(const Stage2Solution& lift) override {
    out_ << ToJsonLine(Stage2Record(lift)) << '\n';
  }
  void OnTaskDone(const std::vector<int>&) override {
    if (!out_.flush()) throw Error(ErrorCode::kIoError, "cannot write records");
  }

 private:
  std::ostream& out_;
};

// Output stream that is either a file or the fallback stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback,
         std::ios::openmode mode = std::ios::trunc) {
    if (path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::out | mode);
    if (!*file_) throw Error(ErrorCode::kIoError, "cannot open " + path);
    stream_ = file_.get();
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

// Keeps only records of tasks the checkpoint lists as complete; anything
// else was written by a task that did not finish. An unterminated last line
// is a write cut short by a kill.
void TrimToCompleted(const std::string& path,
                     const std::set<std::vector<int>>& completed, int depth) {
  if (!std::filesystem::exists(path)) return;
  const std::string text = ReadTextFile(path);
  std::string kept;
  size_t pos = 0;
  for (size_t end; (end = text.find('\n', pos)) != std::string::npos;
       pos = end + 1) {
    const std::string_view line(text.data() + pos, end - pos);
    if (line.empty()) continue;
    const SolutionRecord r = ParseJsonLine(line);
    if (r.c1 && completed.count(TaskPrefixOf(*r.c1, depth))) {
      kept += line;
      kept += '\n';
    }
  }
  WriteTextFile(path, kept);
}

AdjacencyMatrix LoadDigraph(const std::string& input, int index) {
  const std::string text = ReadTextFile(input);
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    std::istringstream in(text);
    const std::vector<SolutionRecord> records = ReadJsonl(in);
    if (index < 0 || index >= static_cast<int>(records.size())) {
      throw Error(ErrorCode::kParseError,
                  "record index " + std::to_string(index) + " out of range (" +
                      std::to_string(records.size()) + " records)");
    }
    return RecordAdjacency(records[index]);
  }
  return ParseAdjacency(text);
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInternalConsistency:
    case ErrorCode::kCertificateOracleDisagreement:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

int Verify(const std::string& matrix_path, const DsrgParams& p,
           std::ostream& out) {
  const AdjacencyMatrix a = ParseAdjacency(ReadTextFile(matrix_path));
  const VerificationReport eq = VerifyMatrixEquations(a, p);
  const VerificationReport paths = VerifyPathCounts(a, p);
  out << "matrix equations: " << (eq.passed ? "passed" : "FAILED") << '\n';
  if (!eq.passed) out << eq.ToString();
  out << "path counts: " << (paths.passed ? "passed" : "FAILED") << '\n';
  if (!paths.passed) out << paths.ToString();
  if (eq.passed != paths.passed) {
    out << "verifiers disagree\n";
    return kExitInternal;
  }
  return eq.passed ? kExitOk : kExitFailed;
}

int Search(const SearchOptions& options, std::ostream& out, std::ostream& log) {
  const ResolvedConfig& c = options.config;
  SearchConfig sc;
  sc.threads = c.threads;
  sc.checkpoint_path = c.checkpoint;
  sc.resume = options.resume;
  sc.restriction = c.subtree;
  sc.limit = c.limit;
  sc.stage1_only = c.stage1_only;
  sc.stage2.all_phases = c.all_phases;
  sc.stop_after_tasks = options.stop_after_tasks;

  bool append = false;
  if (options.resume && !c.checkpoint.empty() && !c.out.empty()) {
    std::ifstream ck(c.checkpoint);
    if (ck) {
      const auto entries =
          ParseCheckpoint(ck, SearchFingerprint(c.params, c.border, sc));
      std::set<std::vector<int>> done;
      for (const auto& e : entries) done.insert(e.prefix);
      const int n = c.border.blocks();
      TrimToCompleted(c.out, done, std::min(2, n));
      append = true;
    }
  }
  Output records(c.out, out, append ? std::ios::app : std::ios::trunc);
  JsonlSink sink(records.get());
  const SearchSummary s = RunSearch(c.params, c.border, sc, sink);
  records.get().flush();

  log << "summary: stage1=" << s.stage1_total;
  if (!c.stage1_only) {
    log << " liftable=" << s.liftable << " stage2=" << s.stage2_total;
  }
  log << " truncated=" << (s.truncated ? "true" : "false") << '\n';
  log << "tasks: total=" << s.tasks_total << " resumed=" << s.tasks_resumed
      << " run=" << s.tasks_run << " nodes: stage1=" << s.stage1_nodes
      << " stage2=" << s.stage2_nodes << " time=" << std::fixed
      << std::setprecision(2) << s.seconds << "s\n";
  return kExitOk;
}

int Classify(const std::string& input, const std::string& out_path,
             int threads, std::ostream& out, std::ostream& log) {
  std::ifstream in(input);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + input);
  std::vector<AdjacencyMatrix> family;
  for (const SolutionRecord& r : ReadJsonl(in)) {
    if (r.kind == RecordKind::kStage2 && r.adjacency) {
      family.push_back(RecordAdjacency(r));
    }
  }
  const Classification result = dsrg::Classify(family, {threads});
  for (const auto& [first, repeat] : result.duplicates) {
    log << "warning: record " << repeat << " duplicates record " << first
        << '\n';
  }
  Output records(out_path, out);
  for (const IsoClass& cls : result.classes) {
    records.get() << ToJsonLine(ClassRecord(cls)) << '\n';
  }
  records.get().flush();

  log << "class  size  aut  reverse  representative\n";
  for (const IsoClass& cls : result.classes) {
    log << std::setw(5) << cls.id << std::setw(6) << cls.members.size()
        << std::setw(5) << cls.automorphism_order.str() << std::setw(9)
        << (cls.reversal_partner ? std::to_string(*cls.reversal_partner)
                                 : std::string("-"))
        << std::setw(16) << cls.representative << '\n';
  }
  log << "classes=" << result.classes.size() << " members=" << family.size()
      << " duplicates=" << result.duplicates.size()
      << " reversal_consistent=" << (result.reversal_consistent ? "true" : "false")
      << " oracle_calls=" << result.oracle_calls << '\n';
  return kExitOk;
}

int ExportDot(const std::string& input, int index, DotKind kind,
              std::ostream& out) {
  const AdjacencyMatrix a = LoadDigraph(input, index);
  const SkeletonRigging sr = ExtractSkeletonRigging(a, FindFloorStructure(a));
  out << (kind == DotKind::kSkeleton ? SkeletonDot(sr) : RiggingDot(sr));
  return kExitOk;
}

int Complement(const std::string& matrix_path,
               const std::optional<DsrgParams>& params,
               const std::string& out_path, std::ostream& out,
               std::ostream& log) {
  const AdjacencyMatrix a = ParseAdjacency(ReadTextFile(matrix_path));
  const std::string text = RenderMatrix(dsrg::Complement(a));
  if (out_path.empty()) {
    out << text;
  } else {
    WriteTextFile(out_path, text);
  }
  if (params) {
    const DsrgParams q = ComplementParams(*params);
    log << "params " << q.v << ' ' << q.k << ' ' << q.t << ' ' << q.lambda
        << ' ' << q.mu << '\n';
  }
  return kExitOk;
}

int Compactify(const std::string& matrix_path, int block_size,
               std::ostream& out) {
  IntMatrix m = ParseBinaryMatrix(ReadTextFile(matrix_path));
  if (block_size < 1) {
    throw Error(ErrorCode::kBadDimension, "block size must be positive");
  }
  if (block_size > 1 && m.rows() % block_size == 1) {
    m = m.Sub(1, 1, m.rows() - 1, m.cols() - 1);
  }
  out << ToString(dsrg::Compactify(m, block_size));
  return kExitOk;
}

}  // namespace dsrg::cli
