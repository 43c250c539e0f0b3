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

#pragma once

// Dense linear algebra over the two-element field.
//
// Matrices are stored bit-packed, one run of 64-bit words per row. All
// routines act on row vectors: a matrix M represents the linear map
// v -> v * M, so row i of M is the image of the i-th basis vector.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dihedral {

using Word64 = std::uint64_t;

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  // One '0'/'1' string per row; all strings must have the same length.
  static BitMatrix from_strings(const std::vector<std::string>& rows,
                                std::size_t cols_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    Word64& w = data_[r * wpr_ + (c >> 6)];
    const Word64 mask = Word64{1} << (c & 63);
    w = value ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) {
    data_[r * wpr_ + (c >> 6)] ^= Word64{1} << (c & 63);
  }

  std::span<Word64> row(std::size_t r) { return {data_.data() + r * wpr_, wpr_}; }
  std::span<const Word64> row(std::size_t r) const {
    return {data_.data() + r * wpr_, wpr_};
  }
  void xor_into_row(std::size_t r, std::span<const Word64> src);
  bool row_is_zero(std::size_t r) const;
  void swap_rows(std::size_t a, std::size_t b);

  bool is_zero() const;
  bool is_identity() const;
  std::size_t popcount() const;

  BitMatrix transpose() const;
  BitMatrix pow(std::uint64_t e) const;
  BitMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                      std::size_t nc) const;
  BitMatrix select_rows(std::span<const std::size_t> idx) const;
  void set_block(std::size_t r0, std::size_t c0, const BitMatrix& block);
  void append_row(std::span<const Word64> bits);

  std::vector<std::string> to_strings() const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b);
  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  BitMatrix& operator+=(const BitMatrix& other);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word64> data_;
};

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);
BitMatrix hstack(const BitMatrix& left, const BitMatrix& right);
BitMatrix block_diagonal(const BitMatrix& a, const BitMatrix& b);
BitMatrix kronecker_product(const BitMatrix& a, const BitMatrix& b);

// Row-reduced echelon form with leftmost pivots; zero rows are dropped.
struct Echelon {
  BitMatrix basis;                  // rank x cols, reduced
  std::vector<std::size_t> pivots;  // pivot column of each basis row
  std::size_t rank() const { return pivots.size(); }
};
Echelon row_echelon(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

struct RankKernel {
  std::size_t rank = 0;
  // Rows are vectors v with m * v^T = 0, in reduced echelon form.
  BitMatrix kernel_basis;
};
RankKernel rank_kernel(const BitMatrix& m);

// Rows v with v * m = 0, reduced echelon form.
BitMatrix left_kernel(const BitMatrix& m);

// A subspace of K^n held in reduced echelon form, with fast membership and
// coordinate extraction (coordinates are read off the pivot columns).
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient);
  explicit Subspace(const BitMatrix& spanning_rows);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return ech_.rank(); }
  const BitMatrix& basis() const { return ech_.basis; }
  const std::vector<std::size_t>& pivots() const { return ech_.pivots; }

  bool contains(std::span<const Word64> v) const;
  // Coordinates of v relative to basis(); v must lie in the subspace.
  std::vector<std::size_t> coordinates(std::span<const Word64> v) const;
  // Matrix C with rows(m) = C * basis(); every row of m must lie in the space.
  BitMatrix coordinates_of_rows(const BitMatrix& m) const;
  // Reduce v modulo the subspace in place (clears every pivot position).
  void reduce(std::span<Word64> v) const;

  // Standard basis vectors completing basis() to K^n, as row indices.
  std::vector<std::size_t> complement_indices() const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  // Image of the subspace under v -> v * m.
  Subspace image(const BitMatrix& m) const;

 private:
  std::size_t ambient_ = 0;
  Echelon ech_;
};

// A*H = H*B constraint on an unknown matrix H.
struct IntertwineConstraint {
  BitMatrix a;
  BitMatrix b;
};

// Basis of { H : a_k H = H b_k for every constraint }, each H of shape
// rows(a) x cols(b). The basis comes from the reduced kernel of the flattened
// system and is deterministic.
std::vector<BitMatrix> solve_linear(std::span<const IntertwineConstraint> system);

// Flattening used by solve_linear and coordinate reads on hom spaces.
std::vector<Word64> flatten(const BitMatrix& m);
BitMatrix unflatten(std::span<const Word64> bits, std::size_t rows, std::size_t cols);

}  // namespace dihedral
