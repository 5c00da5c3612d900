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

#include "dsrg/circulant.h"

#include <sstream>

#include "dsrg/error.h"

namespace dsrg {

CycPoly::CycPoly(int modulus) {
  if (modulus <= 0) {
    throw Error(ErrorCode::kBadDimension, "modulus must be positive");
  }
  coeffs_.assign(modulus, 0);
}

CycPoly::CycPoly(int modulus, std::vector<int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (modulus <= 0 || static_cast<int>(coeffs_.size()) != modulus) {
    throw Error(ErrorCode::kBadDimension,
                "coefficient count must equal the modulus");
  }
}

CycPoly CycPoly::One(int modulus) { return Monomial(modulus, 0); }

CycPoly CycPoly::Monomial(int modulus, int exponent) {
  CycPoly p(modulus);
  p.coeffs_[((exponent % modulus) + modulus) % modulus] = 1;
  return p;
}

CycPoly CycPoly::AllOnes(int modulus) {
  return CycPoly(modulus, std::vector<int64_t>(modulus, 1));
}

CycPoly CycPoly::FromMask(int modulus, unsigned mask) {
  if (modulus < 32 && (mask >> modulus) != 0) {
    throw Error(ErrorCode::kBadDimension, "mask has bits above the modulus");
  }
  CycPoly p(modulus);
  for (int i = 0; i < modulus; ++i) p.coeffs_[i] = (mask >> i) & 1u;
  return p;
}

int64_t CycPoly::CoefficientSum() const {
  int64_t s = 0;
  for (int64_t c : coeffs_) s += c;
  return s;
}

bool CycPoly::IsBinary() const {
  for (int64_t c : coeffs_) {
    if (c != 0 && c != 1) return false;
  }
  return true;
}

unsigned CycPoly::ToMask() const {
  if (!IsBinary() || modulus() > 31) {
    throw Error(ErrorCode::kBadDimension, "polynomial is not a 0/1 mask");
  }
  unsigned mask = 0;
  for (int i = 0; i < modulus(); ++i) {
    if (coeffs_[i]) mask |= 1u << i;
  }
  return mask;
}

namespace {

void RequireSameModulus(const CycPoly& p, const CycPoly& q) {
  if (p.modulus() != q.modulus()) {
    throw Error(ErrorCode::kModulusMismatch,
                "moduli " + std::to_string(p.modulus()) + " and " +
                    std::to_string(q.modulus()));
  }
}

}  // namespace

CycPoly PolyAdd(const CycPoly& p, const CycPoly& q) {
  RequireSameModulus(p, q);
  const int m = p.modulus();
  std::vector<int64_t> out(m);
  for (int i = 0; i < m; ++i) out[i] = p.coeff(i) + q.coeff(i);
  return CycPoly(m, std::move(out));
}

CycPoly PolyMul(const CycPoly& p, const CycPoly& q) {
  RequireSameModulus(p, q);
  const int m = p.modulus();
  std::vector<int64_t> out(m, 0);
  for (int i = 0; i < m; ++i) {
    if (p.coeff(i) == 0) continue;
    for (int j = 0; j < m; ++j) {
      out[(i + j) % m] += p.coeff(i) * q.coeff(j);
    }
  }
  return CycPoly(m, std::move(out));
}

CycPoly PolyScale(int64_t s, const CycPoly& p) {
  std::vector<int64_t> out(p.coeffs().begin(), p.coeffs().end());
  for (int64_t& c : out) c *= s;
  return CycPoly(p.modulus(), std::move(out));
}

std::string ToString(const CycPoly& p) {
  std::string out;
  for (int i = 0; i < p.modulus(); ++i) {
    const int64_t c = p.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const int64_t a = c < 0 ? -c : c;
    if (i == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += std::to_string(a);
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CompactMatrix::CompactMatrix(int n, int modulus)
    : n_(n), modulus_(modulus),
      entries_(static_cast<size_t>(n) * n, CycPoly::Zero(modulus)) {
  if (n < 0) throw Error(ErrorCode::kBadDimension, "negative block dimension");
}

CompactMatrix CompactMatrix::Identity(int n, int modulus) {
  CompactMatrix m(n, modulus);
  for (int i = 0; i < n; ++i) m.set(i, i, CycPoly::One(modulus));
  return m;
}

void CompactMatrix::set(int i, int j, CycPoly p) {
  if (p.modulus() != modulus_) {
    throw Error(ErrorCode::kModulusMismatch, "entry modulus differs");
  }
  entries_[Index(i, j)] = std::move(p);
}

namespace {

void RequireCompatible(const CompactMatrix& a, const CompactMatrix& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "block dimensions differ");
  }
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorCode::kModulusMismatch, "moduli differ");
  }
}

}  // namespace

CompactMatrix CompactAdd(const CompactMatrix& a, const CompactMatrix& b) {
  RequireCompatible(a, b);
  CompactMatrix out(a.n(), a.modulus());
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
  }
  return out;
}

CompactMatrix CompactMul(const CompactMatrix& a, const CompactMatrix& b) {
  RequireCompatible(a, b);
  const int n = a.n();
  CompactMatrix out(n, a.modulus());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      CycPoly acc = CycPoly::Zero(a.modulus());
      for (int k = 0; k < n; ++k) acc = acc + a.at(i, k) * b.at(k, j);
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

CompactMatrix CompactScale(int64_t s, const CompactMatrix& a) {
  CompactMatrix out(a.n(), a.modulus());
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) out.set(i, j, PolyScale(s, a.at(i, j)));
  }
  return out;
}

CycPoly PolyFromBlock(const IntMatrix& block) {
  if (!block.square() || block.rows() == 0) {
    throw Error(ErrorCode::kBadDimension, "block must be square and nonempty");
  }
  const int m = block.rows();
  for (int r = 1; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      if (block(r, c) != block(0, ((c - r) % m + m) % m)) {
        throw Error(ErrorCode::kNotCirculant,
                    "row " + std::to_string(r) +
                        " is not the cyclic shift of row " +
                        std::to_string(r - 1));
      }
    }
  }
  std::vector<int64_t> coeffs(block.Row(0).begin(), block.Row(0).end());
  return CycPoly(m, std::move(coeffs));
}

IntMatrix BlockFromPoly(const CycPoly& p) {
  const int m = p.modulus();
  IntMatrix out(m, m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) out(r, c) = p.coeff(((c - r) % m + m) % m);
  }
  return out;
}

CompactMatrix Compactify(const IntMatrix& m, int block_size) {
  if (block_size <= 0 || !m.square() || m.rows() % block_size != 0) {
    throw Error(ErrorCode::kBadDimension,
                "block size " + std::to_string(block_size) +
                    " does not divide order " + std::to_string(m.rows()));
  }
  const int n = m.rows() / block_size;
  CompactMatrix out(n, block_size);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      try {
        out.set(i, j,
                PolyFromBlock(m.Sub(i * block_size, j * block_size,
                                    block_size, block_size)));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNotCirculant) throw;
        throw Error(ErrorCode::kNotCirculant,
                    "block (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") is not circulant");
      }
    }
  }
  return out;
}

IntMatrix Expand(const CompactMatrix& m) {
  const int b = m.modulus();
  IntMatrix out(m.n() * b, m.n() * b);
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      const CycPoly& p = m.at(i, j);
      for (int r = 0; r < b; ++r) {
        for (int c = 0; c < b; ++c) {
          out(i * b + r, j * b + c) = p.coeff(((c - r) % b + b) % b);
        }
      }
    }
  }
  return out;
}

IntMatrix EvalAtOne(const CompactMatrix& m) {
  IntMatrix out(m.n(), m.n());
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) out(i, j) = m.at(i, j).CoefficientSum();
  }
  return out;
}

std::string ToString(const CompactMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      if (j) os << " | ";
      os << ToString(m.at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace dsrg
