// Copyright 2026 The Dihedral Authors
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

#include "dihedral/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "dihedral/error.hpp"

namespace dihedral {
namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

template <typename F>
void for_each_set_bit(std::span<const Word64> words, F&& f) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    Word64 bits = words[w];
    while (bits != 0) {
      const int t = std::countr_zero(bits);
      f(w * 64 + static_cast<std::size_t>(t));
      bits &= bits - 1;
    }
  }
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows,
                                  std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::kParseError, "matrix rows have unequal length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch == '1') {
        m.set(r, c);
      } else if (ch != '0') {
        throw Error(ErrorCode::kParseError,
                    std::string("matrix entry must be '0' or '1', got '") + ch + "'");
      }
    }
  }
  return m;
}

void BitMatrix::xor_into_row(std::size_t r, std::span<const Word64> src) {
  Word64* dst = data_.data() + r * wpr_;
  for (std::size_t w = 0; w < wpr_; ++w) dst[w] ^= src[w];
}

bool BitMatrix::row_is_zero(std::size_t r) const {
  const auto rw = row(r);
  return std::all_of(rw.begin(), rw.end(), [](Word64 w) { return w == 0; });
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * wpr_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * wpr_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * wpr_));
}

bool BitMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Word64 w) { return w == 0; });
}

bool BitMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto rw = row(r);
    for (std::size_t w = 0; w < wpr_; ++w) {
      const Word64 expect = (r >> 6) == w ? (Word64{1} << (r & 63)) : 0;
      if (rw[w] != expect) return false;
    }
  }
  return true;
}

std::size_t BitMatrix::popcount() const {
  std::size_t n = 0;
  for (Word64 w : data_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for_each_set_bit(row(r), [&](std::size_t c) { t.set(c, r); });
  }
  return t;
}

BitMatrix BitMatrix::pow(std::uint64_t e) const {
  assert(rows_ == cols_);
  BitMatrix result = identity(rows_);
  BitMatrix base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

BitMatrix BitMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
  BitMatrix s(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) {
      if (get(r0 + r, c0 + c)) s.set(r, c);
    }
  }
  return s;
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> idx) const {
  BitMatrix s(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) s.xor_into_row(i, row(idx[i]));
  return s;
}

void BitMatrix::set_block(std::size_t r0, std::size_t c0, const BitMatrix& block) {
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t c = 0; c < block.cols(); ++c) set(r0 + r, c0 + c, block.get(r, c));
  }
}

void BitMatrix::append_row(std::span<const Word64> bits) {
  data_.insert(data_.end(), bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(wpr_));
  ++rows_;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t r = 0; r < rows_; ++r) {
    for_each_set_bit(row(r), [&](std::size_t c) { out[r][c] = '1'; });
  }
  return out;
}

bool operator==(const BitMatrix& a, const BitMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix c = a;
  c += b;
  return c;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= other.data_[i];
  return *this;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  assert(a.cols() == b.rows());
  BitMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for_each_set_bit(a.row(i), [&](std::size_t k) { c.xor_into_row(i, b.row(k)); });
  }
  return c;
}

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
  assert(top.cols() == bottom.cols() || top.rows() == 0 || bottom.rows() == 0);
  const std::size_t cols = top.rows() != 0 ? top.cols() : bottom.cols();
  BitMatrix m(top.rows() + bottom.rows(), cols);
  for (std::size_t r = 0; r < top.rows(); ++r) m.xor_into_row(r, top.row(r));
  for (std::size_t r = 0; r < bottom.rows(); ++r) {
    m.xor_into_row(top.rows() + r, bottom.row(r));
  }
  return m;
}

BitMatrix hstack(const BitMatrix& left, const BitMatrix& right) {
  assert(left.rows() == right.rows());
  BitMatrix m(left.rows(), left.cols() + right.cols());
  m.set_block(0, 0, left);
  m.set_block(0, left.cols(), right);
  return m;
}

BitMatrix block_diagonal(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

BitMatrix kronecker_product(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.get(i, j)) k.set_block(i * b.rows(), j * b.cols(), b);
    }
  }
  return k;
}

Echelon row_echelon(const BitMatrix& m) {
  BitMatrix work = m;
  Echelon out;
  std::size_t r = 0;
  const std::size_t wpr = work.words_per_row();
  for (std::size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
    const std::size_t w = c >> 6;
    const Word64 mask = Word64{1} << (c & 63);
    std::size_t p = r;
    while (p < work.rows() && (work.row(p)[w] & mask) == 0) ++p;
    if (p == work.rows()) continue;
    work.swap_rows(r, p);
    const auto pivot = work.row(r);
    for (std::size_t i = 0; i < work.rows(); ++i) {
      if (i == r) continue;
      auto target = work.row(i);
      if ((target[w] & mask) == 0) continue;
      for (std::size_t k = w; k < wpr; ++k) target[k] ^= pivot[k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.basis = BitMatrix(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) out.basis.xor_into_row(i, work.row(i));
  return out;
}

std::size_t rank(const BitMatrix& m) {
  // Forward elimination only; no back substitution needed for the rank.
  BitMatrix work = m;
  std::size_t r = 0;
  const std::size_t wpr = work.words_per_row();
  for (std::size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
    const std::size_t w = c >> 6;
    const Word64 mask = Word64{1} << (c & 63);
    std::size_t p = r;
    while (p < work.rows() && (work.row(p)[w] & mask) == 0) ++p;
    if (p == work.rows()) continue;
    work.swap_rows(r, p);
    const auto pivot = work.row(r);
    for (std::size_t i = r + 1; i < work.rows(); ++i) {
      auto target = work.row(i);
      if ((target[w] & mask) == 0) continue;
      for (std::size_t k = w; k < wpr; ++k) target[k] ^= pivot[k];
    }
    ++r;
  }
  return r;
}

RankKernel rank_kernel(const BitMatrix& m) {
  const Echelon ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  BitMatrix kernel(m.cols() - ech.rank(), m.cols());
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    kernel.set(k, f);
    for (std::size_t i = 0; i < ech.rank(); ++i) {
      if (ech.basis.get(i, f)) kernel.set(k, ech.pivots[i]);
    }
    ++k;
  }
  RankKernel out;
  out.rank = ech.rank();
  out.kernel_basis = row_echelon(kernel).basis;
  if (out.kernel_basis.rows() == 0) out.kernel_basis = BitMatrix(0, m.cols());
  return out;
}

BitMatrix left_kernel(const BitMatrix& m) {
  return rank_kernel(m.transpose()).kernel_basis;
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient) {
  ech_.basis = BitMatrix(0, ambient);
}

Subspace::Subspace(const BitMatrix& spanning_rows)
    : ambient_(spanning_rows.cols()), ech_(row_echelon(spanning_rows)) {}

void Subspace::reduce(std::span<Word64> v) const {
  for (std::size_t k = 0; k < ech_.rank(); ++k) {
    const std::size_t p = ech_.pivots[k];
    if ((v[p >> 6] >> (p & 63)) & 1U) {
      const auto b = ech_.basis.row(k);
      for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= b[w];
    }
  }
}

bool Subspace::contains(std::span<const Word64> v) const {
  std::vector<Word64> tmp(v.begin(), v.end());
  reduce(tmp);
  return std::all_of(tmp.begin(), tmp.end(), [](Word64 w) { return w == 0; });
}

std::vector<std::size_t> Subspace::coordinates(std::span<const Word64> v) const {
  std::vector<std::size_t> coords;
  for (std::size_t k = 0; k < ech_.rank(); ++k) {
    const std::size_t p = ech_.pivots[k];
    if ((v[p >> 6] >> (p & 63)) & 1U) coords.push_back(k);
  }
  return coords;
}

BitMatrix Subspace::coordinates_of_rows(const BitMatrix& m) const {
  BitMatrix c(m.rows(), dim());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < dim(); ++k) {
      if (m.get(i, ech_.pivots[k])) c.set(i, k);
    }
  }
  return c;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (std::size_t p : ech_.pivots) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (!is_pivot[i]) out.push_back(i);
  }
  return out;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
  const BitMatrix rel = left_kernel(vstack(basis(), other.basis()));
  BitMatrix vecs(rel.rows(), ambient_);
  for (std::size_t r = 0; r < rel.rows(); ++r) {
    for (std::size_t k = 0; k < dim(); ++k) {
      if (rel.get(r, k)) vecs.xor_into_row(r, basis().row(k));
    }
  }
  return Subspace(vecs);
}

Subspace Subspace::sum(const Subspace& other) const {
  return Subspace(vstack(basis(), other.basis()));
}

Subspace Subspace::image(const BitMatrix& m) const {
  if (dim() == 0) return Subspace(m.cols());
  return Subspace(basis() * m);
}

std::vector<Word64> flatten(const BitMatrix& m) {
  std::vector<Word64> bits(words_for(m.rows() * m.cols()), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for_each_set_bit(m.row(r), [&](std::size_t c) {
      const std::size_t idx = r * m.cols() + c;
      bits[idx >> 6] |= Word64{1} << (idx & 63);
    });
  }
  return bits;
}

BitMatrix unflatten(std::span<const Word64> bits, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for_each_set_bit(bits, [&](std::size_t idx) {
    if (idx < rows * cols) m.set(idx / cols, idx % cols);
  });
  return m;
}

std::vector<BitMatrix> solve_linear(std::span<const IntertwineConstraint> system) {
  if (system.empty()) return {};
  const std::size_t m = system.front().a.rows();
  const std::size_t n = system.front().b.cols();
  for (const auto& c : system) {
    if (c.a.rows() != m || c.a.cols() != m || c.b.rows() != n || c.b.cols() != n) {
      throw Error(ErrorCode::kInvalidArgument, "solve_linear: shape mismatch");
    }
  }
  const std::size_t unknowns = m * n;
  BitMatrix eqs(system.size() * m * n, unknowns);
  std::size_t row = 0;
  for (const auto& c : system) {
    const BitMatrix bt = c.b.transpose();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j, ++row) {
        // (A H)_{ij} = sum_k A_ik H_kj ; (H B)_{ij} = sum_k H_ik B_kj
        for_each_set_bit(c.a.row(i), [&](std::size_t k) { eqs.flip(row, k * n + j); });
        for_each_set_bit(bt.row(j), [&](std::size_t k) { eqs.flip(row, i * n + k); });
      }
    }
  }
  const BitMatrix kernel = rank_kernel(eqs).kernel_basis;
  std::vector<BitMatrix> out;
  out.reserve(kernel.rows());
  for (std::size_t r = 0; r < kernel.rows(); ++r) out.push_back(unflatten(kernel.row(r), m, n));
  return out;
}

}  // namespace dihedral
