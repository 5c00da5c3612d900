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

#include "dsrg/run_config.h"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "dsrg/error.h"

namespace dsrg {
namespace {

std::string_view Trim(std::string_view s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T ParseNumber(std::string_view s, const std::string& what) {
  s = Trim(s);
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParseError,
                what + ": '" + std::string(s) + "' is not an integer");
  }
  return value;
}

bool ParseBool(std::string_view s, const std::string& what) {
  s = Trim(s);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw Error(ErrorCode::kParseError,
              what + ": '" + std::string(s) + "' is not a boolean");
}

template <typename T>
void Take(std::optional<T>& into, const std::optional<T>& from) {
  if (from) into = from;
}

}  // namespace

DsrgParams ParseParams(std::string_view text) {
  std::string normalized(text);
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(normalized);
  std::vector<int> values;
  std::string token;
  while (in >> token) values.push_back(ParseNumber<int>(token, "params"));
  if (values.size() != 5) {
    throw Error(ErrorCode::kParseError,
                "params: expected 5 integers \"v k t lambda mu\", got " +
                    std::to_string(values.size()));
  }
  return DsrgParams::Make(values[0], values[1], values[2], values[3],
                          values[4]);
}

std::vector<int> ParseIntList(std::string_view text) {
  std::vector<int> out;
  text = Trim(text);
  if (text.empty()) return out;
  size_t pos = 0;
  for (;;) {
    const size_t comma = text.find(',', pos);
    out.push_back(ParseNumber<int>(text.substr(pos, comma - pos), "list"));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

RunConfig ParseRunConfig(std::string_view text) {
  RunConfig c;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string_view line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const size_t eq = line.find('=');
    const std::string where = "config line " + std::to_string(number);
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParseError, where + ": expected key = value");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string_view value = Trim(line.substr(eq + 1));
    const std::string what = where + " (" + key + ")";
    try {
      if (key == "params") c.params = ParseParams(value);
      else if (key == "block_size") c.block_size = ParseNumber<int>(value, what);
      else if (key == "border_row") c.border_row = std::string(value);
      else if (key == "border_col") c.border_col = std::string(value);
      else if (key == "threads") c.threads = ParseNumber<int>(value, what);
      else if (key == "checkpoint") c.checkpoint = std::string(value);
      else if (key == "out") c.out = std::string(value);
      else if (key == "limit") c.limit = ParseNumber<uint64_t>(value, what);
      else if (key == "subtree") c.subtree = ParseIntList(value);
      else if (key == "stage1_only") c.stage1_only = ParseBool(value, what);
      else if (key == "all_phases") c.all_phases = ParseBool(value, what);
      else throw Error(ErrorCode::kParseError, where + ": unknown key '" + key + "'");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kParseError) {
        throw Error(e.code(), where + ": " + e.message());
      }
      throw;
    }
  }
  return c;
}

RunConfig MergeRunConfig(const RunConfig& file, const RunConfig& flags) {
  RunConfig c = file;
  Take(c.params, flags.params);
  Take(c.block_size, flags.block_size);
  Take(c.border_row, flags.border_row);
  Take(c.border_col, flags.border_col);
  Take(c.threads, flags.threads);
  Take(c.checkpoint, flags.checkpoint);
  Take(c.out, flags.out);
  Take(c.limit, flags.limit);
  Take(c.subtree, flags.subtree);
  Take(c.stage1_only, flags.stage1_only);
  Take(c.all_phases, flags.all_phases);
  return c;
}

ResolvedConfig Resolve(const RunConfig& c) {
  ResolvedConfig r;
  if (c.params) r.params = *c.params;
  if (c.block_size) r.block_size = *c.block_size;
  if (c.border_row.has_value() != c.border_col.has_value()) {
    throw Error(ErrorCode::kInvalidBorder,
                "border_row and border_col must be given together");
  }
  r.border = c.border_row
                 ? BorderPattern::FromStrings(r.params, r.block_size,
                                              *c.border_row, *c.border_col)
                 : DefaultBorder(r.params, r.block_size);
  if (c.threads) {
    r.threads = *c.threads;
  } else if (const char* env = std::getenv(kThreadsEnvVar); env && *env) {
    r.threads = ParseNumber<int>(env, kThreadsEnvVar);
  }
  if (r.threads < 1) {
    throw Error(ErrorCode::kInvalidParams, "thread count must be positive");
  }
  if (c.checkpoint) r.checkpoint = *c.checkpoint;
  if (c.out) r.out = *c.out;
  r.limit = c.limit;
  if (c.subtree) r.subtree = *c.subtree;
  r.stage1_only = c.stage1_only.value_or(false);
  r.all_phases = c.all_phases.value_or(false);
  return r;
}

}  // namespace dsrg
