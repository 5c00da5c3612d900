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

#include "dsrg/int_matrix.h"

#include <sstream>

#include "dsrg/error.h"

namespace dsrg {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotCirculant: return "NotCirculant";
    case ErrorCode::kBadDimension: return "BadDimension";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kNegativeParameter: return "NegativeParameter";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kIndivisibleParameters: return "IndivisibleParameters";
    case ErrorCode::kInvalidBorder: return "InvalidBorder";
    case ErrorCode::kInfeasibleEntry: return "InfeasibleEntry";
    case ErrorCode::kCheckpointCorrupt: return "CheckpointCorrupt";
    case ErrorCode::kNoZ3Structure: return "NoZ3Structure";
    case ErrorCode::kIllegalFloorInterior: return "IllegalFloorInterior";
    case ErrorCode::kNotShiftInvariant: return "NotShiftInvariant";
    case ErrorCode::kCertificateOracleDisagreement:
      return "CertificateOracleDisagreement";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

IntMatrix::IntMatrix(int rows, int cols, int64_t fill)
    : rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows) * cols, fill) {
  if (rows < 0 || cols < 0) {
    throw Error(ErrorCode::kBadDimension, "negative matrix dimension");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows)
    : rows_(static_cast<int>(rows.size())),
      cols_(rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size())) {
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw Error(ErrorCode::kBadDimension, "ragged initializer rows");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::Identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::Ones(int rows, int cols) { return IntMatrix(rows, cols, 1); }

IntMatrix IntMatrix::Sub(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) {
    throw Error(ErrorCode::kBadDimension, "submatrix out of range");
  }
  IntMatrix out(nr, nc);
  for (int r = 0; r < nr; ++r) {
    for (int c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  }
  return out;
}

IntMatrix IntMatrix::Transpose() const {
  IntMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

namespace {

void RequireSameShape(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix shapes differ");
  }
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  RequireSameShape(a, b);
  IntMatrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  }
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  RequireSameShape(a, b);
  IntMatrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "inner dimensions differ");
  }
  IntMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const int64_t x = a(r, k);
      if (x == 0) continue;
      for (int c = 0; c < b.cols(); ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

IntMatrix operator*(int64_t s, const IntMatrix& a) {
  IntMatrix out = a;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out(r, c) *= s;
  }
  return out;
}

std::string ToString(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
  return os;
}

}  // namespace dsrg
