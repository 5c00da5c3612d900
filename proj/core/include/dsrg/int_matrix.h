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

#ifndef DSRG_INT_MATRIX_H_
#define DSRG_INT_MATRIX_H_

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace dsrg {

// Dense row-major integer matrix with exact (64-bit) arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, int64_t fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows);

  static IntMatrix Identity(int n);
  static IntMatrix Ones(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  int64_t& operator()(int r, int c) { return data_[Index(r, c)]; }
  int64_t operator()(int r, int c) const { return data_[Index(r, c)]; }

  std::span<const int64_t> Row(int r) const {
    return {data_.data() + static_cast<size_t>(r) * cols_,
            static_cast<size_t>(cols_)};
  }
  std::span<const int64_t> values() const { return data_; }

  // Copies rows [r0, r0+nr) x cols [c0, c0+nc).
  IntMatrix Sub(int r0, int c0, int nr, int nc) const;
  IntMatrix Transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  size_t Index(int r, int c) const {
    return static_cast<size_t>(r) * cols_ + c;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<int64_t> data_;
};

// Throw Error(kDimensionMismatch) on incompatible shapes.
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(int64_t s, const IntMatrix& a);

std::string ToString(const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace dsrg

#endif  // DSRG_INT_MATRIX_H_
