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

#ifndef DSRG_TESTS_TEST_UTIL_H_
#define DSRG_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dsrg/digraph.h"
#include "dsrg/int_matrix.h"
#include "dsrg/matrix_io.h"

namespace dsrg::testing {

inline std::string TestdataPath(const std::string& name) {
  return std::string(DSRG_TESTDATA_DIR) + "/" + name;
}

// The (22,9,6,3,4) digraph printed in the paper.
inline AdjacencyMatrix PaperExample() {
  return ParseAdjacency(ReadTextFile(TestdataPath("paper_example.txt")));
}

inline IntMatrix Shrikhande() {
  return ParseBinaryMatrix(ReadTextFile(TestdataPath("shrikhande.txt")));
}

inline std::vector<int> RandomPermutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("dsrg_test_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  std::string File(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace dsrg::testing

#endif  // DSRG_TESTS_TEST_UTIL_H_
