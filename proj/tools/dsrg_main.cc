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


#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "dsrg/error.h"
#include "dsrg/matrix_io.h"
#include "dsrg/run_config.h"

namespace {

struct Flags {
  std::string params;
  std::optional<int> block_size;
  std::optional<int> threads;
  std::string config;
  std::string checkpoint;
  std::string out;
  std::optional<uint64_t> limit;
  std::optional<std::string> subtree;
  bool resume = false;
  bool stage1_only = false;
  bool all_phases = false;
  std::optional<std::string> border_row;
  std::optional<std::string> border_col;
  std::optional<uint64_t> stop_after_tasks;
  std::string input;
  int index = 0;
  bool skeleton = false;
  bool rigging = false;
};

dsrg::RunConfig FlagConfig(const Flags& f, const CLI::App& cmd) {
  dsrg::RunConfig c;
  if (!f.params.empty()) c.params = dsrg::ParseParams(f.params);
  c.block_size = f.block_size;
  c.threads = f.threads;
  if (cmd.count("--checkpoint")) c.checkpoint = f.checkpoint;
  if (cmd.count("--out")) c.out = f.out;
  c.limit = f.limit;
  if (f.subtree) c.subtree = dsrg::ParseIntList(*f.subtree);
  if (f.stage1_only) c.stage1_only = true;
  if (f.all_phases) c.all_phases = true;
  c.border_row = f.border_row;
  c.border_col = f.border_col;
  return c;
}

dsrg::ResolvedConfig LoadConfig(const Flags& f, const CLI::App& cmd) {
  dsrg::RunConfig file;
  if (!f.config.empty()) {
    file = dsrg::ParseRunConfig(dsrg::ReadTextFile(f.config));
  }
  return dsrg::Resolve(dsrg::MergeRunConfig(file, FlagConfig(f, cmd)));
}

void AddParams(CLI::App* cmd, Flags& f) {
  cmd->add_option("--params", f.params, "\"v k t lambda mu\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search, verify and classify circulant-block DSRGs"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* verify = app.add_subcommand("verify", "check a 0/1 matrix file");
  verify->add_option("matrix", f.input, "matrix file")->required();
  AddParams(verify, f);

  CLI::App* search = app.add_subcommand("search", "two-stage search");
  AddParams(search, f);
  search->add_option("--config", f.config, "key=value config file");
  search->add_option("--block-size", f.block_size, "circulant block size");
  search->add_option("--threads", f.threads, "worker threads");
  search->add_option("--checkpoint", f.checkpoint, "checkpoint file");
  search->add_flag("--resume", f.resume, "skip tasks in the checkpoint");
  search->add_option("--limit", f.limit, "stop after N stage-1 solutions");
  search->add_option("--subtree", f.subtree, "first-row prefix, e.g. 0,1,1");
  search->add_flag("--stage1-only", f.stage1_only, "skip lifting");
  search->add_flag("--all-phases", f.all_phases,
                   "emit every lift instead of one per phase orbit");
  search->add_option("--out", f.out, "JSONL output (default stdout)");
  search->add_option("--border-row", f.border_row, "border row B as 0/1");
  search->add_option("--border-col", f.border_col, "border column D as 0/1");
  search->add_option("--stop-after-tasks", f.stop_after_tasks,
                     "stop after N tasks (for split runs)");

  CLI::App* classify = app.add_subcommand("classify", "isomorphism classes");
  classify->add_option("input", f.input, "JSONL with stage2 records")
      ->required();
  classify->add_option("--out", f.out, "class JSONL (default stdout)");
  classify->add_option("--threads", f.threads, "worker threads");

  CLI::App* dot = app.add_subcommand("export-dot", "skeleton or rigging DOT");
  dot->add_option("input", f.input, "matrix file or JSONL")->required();
  dot->add_option("--index", f.index, "record index in JSONL input");
  CLI::Option* sk = dot->add_flag("--skeleton", f.skeleton);
  CLI::Option* rg = dot->add_flag("--rigging", f.rigging);
  sk->excludes(rg);

  CLI::App* complement = app.add_subcommand("complement", "write J - I - A");
  complement->add_option("matrix", f.input, "matrix file")->required();
  AddParams(complement, f);
  complement->add_option("--out", f.out, "output file (default stdout)");

  CLI::App* compactify =
      app.add_subcommand("compactify", "print M(x) for a block matrix");
  compactify->add_option("matrix", f.input, "matrix file")->required();
  compactify->add_option("--block-size", f.block_size, "circulant block size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? dsrg::cli::kExitOk : dsrg::cli::kExitUsage;
  }

  try {
    if (*verify) {
      const dsrg::DsrgParams p =
          f.params.empty() ? dsrg::kPaperParams : dsrg::ParseParams(f.params);
      return dsrg::cli::Verify(f.input, p, std::cout);
    }
    if (*search) {
      dsrg::cli::SearchOptions opts;
      opts.config = LoadConfig(f, *search);
      opts.resume = f.resume;
      opts.stop_after_tasks = f.stop_after_tasks;
      return dsrg::cli::Search(opts, std::cout, std::cerr);
    }
    if (*classify) {
      dsrg::RunConfig c;
      c.threads = f.threads;
      return dsrg::cli::Classify(f.input, f.out, dsrg::Resolve(c).threads,
                                 std::cout, std::cerr);
    }
    if (*dot) {
      return dsrg::cli::ExportDot(
          f.input, f.index,
          f.rigging ? dsrg::cli::DotKind::kRigging
                    : dsrg::cli::DotKind::kSkeleton,
          std::cout);
    }
    if (*complement) {
      std::optional<dsrg::DsrgParams> p;
      if (!f.params.empty()) p = dsrg::ParseParams(f.params);
      return dsrg::cli::Complement(f.input, p, f.out, std::cout, std::cerr);
    }
    if (*compactify) {
      return dsrg::cli::Compactify(f.input, f.block_size.value_or(3),
                                   std::cout);
    }
  } catch (const dsrg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dsrg::cli::ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dsrg::cli::kExitInternal;
  }
  return dsrg::cli::kExitUsage;
}
