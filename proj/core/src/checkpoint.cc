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

#include "dsrg/checkpoint.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "dsrg/error.h"

namespace dsrg {
namespace {

constexpr char kHeader[] = "# dsrg-checkpoint v1 ";

[[noreturn]] void Corrupt(int line, const std::string& what) {
  throw Error(ErrorCode::kCheckpointCorrupt,
              "line " + std::to_string(line) + ": " + what);
}

void WriteAll(int fd, const std::string& data, const std::string& path) {
  // One write() so the line lands whole on O_APPEND files.
  const ssize_t written = ::write(fd, data.data(), data.size());
  if (written != static_cast<ssize_t>(data.size()) || ::fsync(fd) != 0) {
    throw Error(ErrorCode::kIoError,
                "cannot write checkpoint " + path + ": " + std::strerror(errno));
  }
}

}  // namespace

std::string FormatCheckpointEntry(const CheckpointEntry& entry) {
  std::ostringstream out;
  for (size_t i = 0; i < entry.prefix.size(); ++i) {
    if (i) out << ',';
    out << entry.prefix[i];
  }
  out << '\t' << entry.stage1 << ' ' << entry.liftable << ' ' << entry.stage2;
  return out.str();
}

std::vector<CheckpointEntry> ParseCheckpoint(std::istream& in,
                                             const std::string& fingerprint) {
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  if (content.empty()) Corrupt(1, "missing header");
  if (content.back() != '\n') {
    Corrupt(static_cast<int>(std::count(content.begin(), content.end(), '\n')) +
                1,
            "unterminated line");
  }
  std::istringstream lines(content);
  std::string line;
  std::getline(lines, line);
  if (line != kHeader + fingerprint) {
    Corrupt(1, "header does not match this run (" + line + ")");
  }
  std::vector<CheckpointEntry> out;
  std::set<std::vector<int>> seen;
  int number = 1;
  while (std::getline(lines, line)) {
    ++number;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) Corrupt(number, "missing counts");
    CheckpointEntry entry;
    std::istringstream prefix(line.substr(0, tab));
    std::string field;
    while (std::getline(prefix, field, ',')) {
      if (field.empty() ||
          field.find_first_not_of("0123456789") != std::string::npos) {
        Corrupt(number, "bad prefix entry '" + field + "'");
      }
      entry.prefix.push_back(std::stoi(field));
    }
    std::istringstream counts(line.substr(tab + 1));
    std::string rest;
    if (!(counts >> entry.stage1 >> entry.liftable >> entry.stage2) ||
        (counts >> rest)) {
      Corrupt(number, "bad counts");
    }
    if (entry.liftable > entry.stage1) Corrupt(number, "inconsistent counts");
    if (!seen.insert(entry.prefix).second) Corrupt(number, "repeated prefix");
    out.push_back(std::move(entry));
  }
  return out;
}

Checkpoint::Checkpoint(std::string path, std::string fingerprint, bool resume)
    : path_(std::move(path)) {
  bool fresh = true;
  if (resume) {
    std::ifstream in(path_);
    if (in) {
      completed_ = ParseCheckpoint(in, fingerprint);
      for (const auto& e : completed_) prefixes_.insert(e.prefix);
      fresh = false;
    }
  }
  const int flags = O_WRONLY | O_CREAT | O_APPEND | (fresh ? O_TRUNC : 0);
  fd_ = ::open(path_.c_str(), flags, 0644);
  if (fd_ < 0) {
    throw Error(ErrorCode::kIoError,
                "cannot open checkpoint " + path_ + ": " + std::strerror(errno));
  }
  if (fresh) WriteAll(fd_, kHeader + fingerprint + "\n", path_);
}

Checkpoint::~Checkpoint() {
  if (fd_ >= 0) ::close(fd_);
}

void Checkpoint::Append(const CheckpointEntry& entry) {
  WriteAll(fd_, FormatCheckpointEntry(entry) + "\n", path_);
  prefixes_.insert(entry.prefix);
  completed_.push_back(entry);
}

}  // namespace dsrg
