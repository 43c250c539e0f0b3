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

// Finite 2-groups given by a multiplication table on generators, and the
// group-algebra machinery shared by the dihedral and Klein-four layers:
// radicals, socles, projective covers, free summands and sub-representations.

#include <cstddef>
#include <span>
#include <vector>

#include "dihedral/gf2.hpp"

namespace dihedral {

struct GroupTable {
  std::size_t order = 0;
  std::size_t num_generators = 0;
  // right_mul[e][k] = index of (element e) * (generator k). Element 0 is 1.
  std::vector<std::vector<std::size_t>> right_mul;
  std::vector<std::size_t> inverse;
};

// Dihedral group of order 4q on generators (x, y). Element index a*2q + k
// denotes x^a (xy)^k with 0 <= a <= 1 and 0 <= k < 2q.
const GroupTable& dihedral_table(int q);
// Klein four group on (g1, g2); element index i + 2j denotes g1^i g2^j.
const GroupTable& klein_table();

// Matrices of all group elements for the representation given on generators.
std::vector<BitMatrix> element_matrices(const GroupTable& g, std::span<const BitMatrix> gens);

// Generators of the right regular representation.
std::vector<BitMatrix> regular_generators(const GroupTable& g);

// A representation on generator matrices (row-vector convention).
struct GroupModule {
  const GroupTable* group = nullptr;
  std::vector<BitMatrix> gens;

  std::size_t dim() const { return gens.empty() ? 0 : gens.front().rows(); }
};

// rad(M) = sum of the images of (g + 1) over the generators.
Subspace radical(const GroupModule& m);
// soc(M) = joint kernel of the (g + 1).
Subspace socle(const GroupModule& m);
Subspace fixed_points(const BitMatrix& g);

// Action on an invariant subspace, in the coordinates of its echelon basis.
GroupModule restrict_to_subspace(const GroupModule& m, const Subspace& s);
// Action on M / S, in the coordinates of the standard basis vectors
// complementing S.
GroupModule quotient_by_subspace(const GroupModule& m, const Subspace& s);

// Contragredient module; generators must be involutions, so each matrix is
// simply transposed.
GroupModule dual(const GroupModule& m);
GroupModule direct_sum(const GroupModule& a, const GroupModule& b);

struct FreeSplit {
  std::size_t free_rank = 0;
  GroupModule complement;  // no free summand
};
// M = (KG)^r + C, with r the rank of the norm element sum_g g on M.
FreeSplit split_free(const GroupModule& m);

// Kernel of a projective cover (syzygy), projective-free.
GroupModule syzygy(const GroupModule& m);
// Cokernel of an injective hull, via duality.
GroupModule cosyzygy(const GroupModule& m);

// Inverse of a square matrix; throws Error(kNotInvertible) if singular.
BitMatrix inverse(const BitMatrix& m);
bool is_invertible(const BitMatrix& m);

}  // namespace dihedral
