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

#include "dihedral/group.hpp"

#include <cassert>
#include <deque>
#include <map>
#include <memory>
#include <mutex>

#include "dihedral/error.hpp"

namespace dihedral {
namespace {

GroupTable build_dihedral(int q) {
  const std::size_t half = 2 * static_cast<std::size_t>(q);
  GroupTable t;
  t.order = 2 * half;
  t.num_generators = 2;
  t.right_mul.assign(t.order, std::vector<std::size_t>(2));
  t.inverse.resize(t.order);
  auto mul = [&](std::size_t e, std::size_t a2, std::size_t k2) {
    const std::size_t a1 = e / half;
    const std::size_t k1 = e % half;
    // x^a1 r^k1 x^a2 r^k2 = x^(a1+a2) r^((-1)^a2 k1 + k2)
    const std::size_t k = ((a2 != 0 ? (half - k1) % half : k1) + k2) % half;
    return ((a1 ^ a2) * half) + k;
  };
  for (std::size_t e = 0; e < t.order; ++e) {
    t.right_mul[e][0] = mul(e, 1, 0);  // x
    t.right_mul[e][1] = mul(e, 1, 1);  // y = x (xy)
    const std::size_t a = e / half;
    const std::size_t k = e % half;
    t.inverse[e] = a == 1 ? e : (half - k) % half;
  }
  return t;
}

GroupTable build_klein() {
  GroupTable t;
  t.order = 4;
  t.num_generators = 2;
  t.right_mul = {{1, 2}, {0, 3}, {3, 0}, {2, 1}};
  t.inverse = {0, 1, 2, 3};
  return t;
}

}  // namespace

const GroupTable& dihedral_table(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GroupTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[q];
  if (!slot) slot = std::make_unique<GroupTable>(build_dihedral(q));
  return *slot;
}

const GroupTable& klein_table() {
  static const GroupTable table = build_klein();
  return table;
}

std::vector<BitMatrix> element_matrices(const GroupTable& g, std::span<const BitMatrix> gens) {
  assert(gens.size() == g.num_generators);
  const std::size_t n = gens.empty() ? 0 : gens.front().rows();
  std::vector<BitMatrix> mats(g.order);
  std::vector<bool> seen(g.order, false);
  std::deque<std::size_t> queue{0};
  mats[0] = BitMatrix::identity(n);
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t e = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < g.num_generators; ++k) {
      const std::size_t f = g.right_mul[e][k];
      if (seen[f]) continue;
      seen[f] = true;
      mats[f] = mats[e] * gens[k];
      queue.push_back(f);
    }
  }
  return mats;
}

std::vector<BitMatrix> regular_generators(const GroupTable& g) {
  std::vector<BitMatrix> out;
  for (std::size_t k = 0; k < g.num_generators; ++k) {
    BitMatrix m(g.order, g.order);
    for (std::size_t e = 0; e < g.order; ++e) m.set(e, g.right_mul[e][k]);
    out.push_back(std::move(m));
  }
  return out;
}

Subspace radical(const GroupModule& m) {
  const std::size_t n = m.dim();
  BitMatrix stacked(0, n);
  for (const auto& g : m.gens) stacked = vstack(stacked, g + BitMatrix::identity(n));
  return Subspace(stacked);
}

Subspace fixed_points(const BitMatrix& g) {
  return Subspace(left_kernel(g + BitMatrix::identity(g.rows())));
}

Subspace socle(const GroupModule& m) {
  const std::size_t n = m.dim();
  BitMatrix side(n, 0);
  for (const auto& g : m.gens) side = hstack(side, g + BitMatrix::identity(n));
  return Subspace(left_kernel(side));
}

GroupModule restrict_to_subspace(const GroupModule& m, const Subspace& s) {
  GroupModule out{m.group, {}};
  for (const auto& g : m.gens) {
    const BitMatrix image = s.basis() * g;
    assert([&] {
      for (std::size_t r = 0; r < image.rows(); ++r) {
        if (!s.contains(image.row(r))) return false;
      }
      return true;
    }());
    out.gens.push_back(s.coordinates_of_rows(image));
  }
  return out;
}

GroupModule quotient_by_subspace(const GroupModule& m, const Subspace& s) {
  const std::vector<std::size_t> comp = s.complement_indices();
  GroupModule out{m.group, {}};
  for (const auto& g : m.gens) {
    BitMatrix q(comp.size(), comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      std::vector<Word64> v(g.row(comp[i]).begin(), g.row(comp[i]).end());
      s.reduce(v);
      for (std::size_t j = 0; j < comp.size(); ++j) {
        if ((v[comp[j] >> 6] >> (comp[j] & 63)) & 1U) q.set(i, j);
      }
    }
    out.gens.push_back(std::move(q));
  }
  return out;
}

GroupModule dual(const GroupModule& m) {
  GroupModule out{m.group, {}};
  for (const auto& g : m.gens) out.gens.push_back(g.transpose());
  return out;
}

GroupModule direct_sum(const GroupModule& a, const GroupModule& b) {
  GroupModule out{a.group, {}};
  for (std::size_t k = 0; k < a.gens.size(); ++k) {
    out.gens.push_back(block_diagonal(a.gens[k], b.gens[k]));
  }
  return out;
}

BitMatrix inverse(const BitMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kNotInvertible, "matrix is not square");
  const std::size_t n = m.rows();
  BitMatrix aug = hstack(m, BitMatrix::identity(n));
  const Echelon ech = row_echelon(aug);
  if (ech.rank() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) {
    throw Error(ErrorCode::kNotInvertible, "matrix is singular");
  }
  return ech.basis.submatrix(0, n, n, n);
}

bool is_invertible(const BitMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

FreeSplit split_free(const GroupModule& m) {
  const std::size_t n = m.dim();
  const GroupTable& g = *m.group;
  const std::vector<BitMatrix> mats = element_matrices(g, m.gens);
  BitMatrix norm(n, n);
  for (const auto& e : mats) norm += e;
  const std::size_t r = rank(norm);
  if (r == 0) return {0, m};

  // Generators v_j = e_{k_j} whose images v_j * N are independent.
  std::vector<std::size_t> chosen;
  Subspace span(n);
  for (std::size_t k = 0; k < n && chosen.size() < r; ++k) {
    if (norm.row_is_zero(k) || span.contains(norm.row(k))) continue;
    chosen.push_back(k);
    span = span.sum(Subspace(norm.select_rows(std::span<const std::size_t>(&k, 1))));
  }
  const BitMatrix s = norm.select_rows(chosen);  // r x n, full row rank
  // Functionals c_i with s * c = I_r.
  const Echelon ech = row_echelon(s);
  BitMatrix sp(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) sp.set(i, j, s.get(i, ech.pivots[j]));
  }
  const BitMatrix sp_inv = inverse(sp);
  BitMatrix c(n, r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < r; ++i) c.set(ech.pivots[j], i, sp_inv.get(j, i));
  }
  // phi(m) = (sum_g f_i(m g^-1) g)_i ; its kernel is a complement of the free part.
  BitMatrix phi(n, 0);
  for (std::size_t e = 0; e < g.order; ++e) phi = hstack(phi, mats[g.inverse[e]] * c);
  const Subspace comp(left_kernel(phi));
  assert(comp.dim() + r * g.order == n);
  return {r, restrict_to_subspace(m, comp)};
}

GroupModule syzygy(const GroupModule& m) {
  const GroupTable& g = *m.group;
  const std::size_t n = m.dim();
  const std::vector<std::size_t> top = radical(m).complement_indices();
  const std::size_t t = top.size();
  if (t == 0) {
    GroupModule zero{m.group, {}};
    for (std::size_t k = 0; k < g.num_generators; ++k) zero.gens.emplace_back(0, 0);
    return zero;
  }
  const std::vector<BitMatrix> mats = element_matrices(g, m.gens);
  BitMatrix cover(t * g.order, n);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t e = 0; e < g.order; ++e) cover.xor_into_row(i * g.order + e, mats[e].row(top[i]));
  }
  GroupModule free{m.group, {}};
  const std::vector<BitMatrix> reg = regular_generators(g);
  for (std::size_t k = 0; k < g.num_generators; ++k) {
    BitMatrix big(t * g.order, t * g.order);
    for (std::size_t i = 0; i < t; ++i) big.set_block(i * g.order, i * g.order, reg[k]);
    free.gens.push_back(std::move(big));
  }
  const Subspace kernel(left_kernel(cover));
  return split_free(restrict_to_subspace(free, kernel)).complement;
}

GroupModule cosyzygy(const GroupModule& m) { return dual(syzygy(dual(m))); }

}  // namespace dihedral
