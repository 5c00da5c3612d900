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

// Circulant matrices and their images in Z[x]/(x^m - 1).
//
// The circulant with first row (a_0, ..., a_{m-1}) (every later row is the
// previous one shifted cyclically one step to the right) corresponds to the
// polynomial a_0 + a_1 x + ... + a_{m-1} x^{m-1}. A block matrix made of
// m x m circulants compactifies to a matrix over the quotient ring; the map
// respects matrix sums and products.
//
// Block layout: block (I, J) occupies rows m*I .. m*I+m-1 and columns
// m*J .. m*J+m-1 of the expanded matrix (0-indexed).

#ifndef DSRG_CIRCULANT_H_
#define DSRG_CIRCULANT_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dsrg/int_matrix.h"

namespace dsrg {

// Element of Z[x]/(x^m - 1). Coefficients are unreduced integers.
class CycPoly {
 public:
  explicit CycPoly(int modulus);
  CycPoly(int modulus, std::vector<int64_t> coeffs);

  static CycPoly Zero(int modulus) { return CycPoly(modulus); }
  static CycPoly One(int modulus);
  // x^e, exponent reduced mod m.
  static CycPoly Monomial(int modulus, int exponent);
  // 1 + x + ... + x^{m-1}.
  static CycPoly AllOnes(int modulus);
  // Bit i of `mask` is the coefficient of x^i.
  static CycPoly FromMask(int modulus, unsigned mask);

  int modulus() const { return static_cast<int>(coeffs_.size()); }
  int64_t coeff(int i) const { return coeffs_[i]; }
  std::span<const int64_t> coeffs() const { return coeffs_; }

  int64_t CoefficientSum() const;
  bool IsBinary() const;
  // Requires IsBinary().
  unsigned ToMask() const;

  friend bool operator==(const CycPoly&, const CycPoly&) = default;

 private:
  std::vector<int64_t> coeffs_;
};

CycPoly PolyAdd(const CycPoly& p, const CycPoly& q);
CycPoly PolyMul(const CycPoly& p, const CycPoly& q);
CycPoly PolyScale(int64_t s, const CycPoly& p);
inline CycPoly operator+(const CycPoly& p, const CycPoly& q) {
  return PolyAdd(p, q);
}
inline CycPoly operator*(const CycPoly& p, const CycPoly& q) {
  return PolyMul(p, q);
}

// Renders e.g. "x + x^2", "2 + x + x^3", "0".
std::string ToString(const CycPoly& p);

// Square block matrix over Z[x]/(x^m - 1).
class CompactMatrix {
 public:
  CompactMatrix(int n, int modulus);

  static CompactMatrix Identity(int n, int modulus);

  int n() const { return n_; }
  int modulus() const { return modulus_; }

  const CycPoly& at(int i, int j) const { return entries_[Index(i, j)]; }
  void set(int i, int j, CycPoly p);

  friend bool operator==(const CompactMatrix&, const CompactMatrix&) = default;

 private:
  size_t Index(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

  int n_;
  int modulus_;
  std::vector<CycPoly> entries_;
};

CompactMatrix CompactAdd(const CompactMatrix& a, const CompactMatrix& b);
CompactMatrix CompactMul(const CompactMatrix& a, const CompactMatrix& b);
CompactMatrix CompactScale(int64_t s, const CompactMatrix& a);

// Reads the polynomial from the first row after checking that every row is
// the cyclic right shift of its predecessor. Throws kNotCirculant.
CycPoly PolyFromBlock(const IntMatrix& block);
IntMatrix BlockFromPoly(const CycPoly& p);

// Throws kBadDimension if m does not divide the order, kNotCirculant with the
// offending block position otherwise.
CompactMatrix Compactify(const IntMatrix& m, int block_size);
IntMatrix Expand(const CompactMatrix& m);

// Substitutes x = 1 entrywise.
IntMatrix EvalAtOne(const CompactMatrix& m);

std::string ToString(const CompactMatrix& m);

}  // namespace dsrg

#endif  // DSRG_CIRCULANT_H_
