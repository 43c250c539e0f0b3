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

// Modules for the dihedral group D_{4q} over GF(2): construction of string,
// band, regular and induced modules, and the functorial operations on them.

#include <cstddef>
#include <string>
#include <vector>

#include "dihedral/gf2.hpp"
#include "dihedral/group.hpp"
#include "dihedral/word.hpp"

namespace dihedral {

// A representation x -> x, y -> y of D_{4q}. Construction checks
// x^2 = y^2 = (xy)^{2q} = 1.
class Rep {
 public:
  Rep(QParam q, BitMatrix x, BitMatrix y);

  QParam q() const { return q_; }
  const BitMatrix& x() const { return x_; }
  const BitMatrix& y() const { return y_; }
  std::size_t dim() const { return x_.rows(); }
  // Central involution z = (xy)^q.
  BitMatrix z() const;

  GroupModule as_group_module() const;
  static Rep from_group_module(QParam q, const GroupModule& m);

  friend bool operator==(const Rep&, const Rep&) = default;

 private:
  QParam q_;
  BitMatrix x_;
  BitMatrix y_;
};

// A module for the Klein four group: two commuting involutions.
struct KleinRep {
  BitMatrix g1;
  BitMatrix g2;

  std::size_t dim() const { return g1.rows(); }
  GroupModule as_group_module() const;
  static KleinRep from_group_module(const GroupModule& m);
  // Checks g1^2 = g2^2 = 1 and g1 g2 = g2 g1.
  bool valid() const;
};

enum class SubgroupId { kGenX, kGenY, kKleinX, kKleinY };

std::string to_string(SubgroupId s);
SubgroupId parse_subgroup(const std::string& text);

// Matrices of the elements of a subgroup, listed as generators: one matrix
// for the cyclic subgroups, (x, z) for KleinX and (y, z) for KleinY.
struct Restriction {
  SubgroupId subgroup;
  std::vector<BitMatrix> gens;
};

Rep trivial_module(QParam q);
Rep string_module(const Word& w, QParam q);
Rep band_module(const Word& cyclic_word, const BitMatrix& phi, QParam q);
Rep regular_module(QParam q);

Restriction restrict(const Rep& m, SubgroupId s);
KleinRep restrict_klein(const Rep& m, SubgroupId s);

// Induction from KleinX or KleinY along a fixed right transversal.
Rep induce(const KleinRep& m, SubgroupId s, QParam q);

Rep tensor(const Rep& a, const Rep& b);
Rep dual(const Rep& m);
Rep direct_sum(const Rep& a, const Rep& b);

struct RadicalSocle {
  Subspace radical;
  Subspace socle;
};
RadicalSocle radical_socle(const Rep& m);

// steps < 0: |steps| syzygies (kernels of projective covers); steps > 0:
// cosyzygies (cokernels of injective hulls). Projective summands are split off.
Rep heller(const Rep& m, int steps);

struct ProjectiveSplit {
  std::size_t projective_rank = 0;  // number of KG summands
  Rep complement;
};
ProjectiveSplit split_projective(const Rep& m);

// Number of trivial summands of a single involution's module: dim - 2 rank(g+1).
std::size_t trivial_summands(const BitMatrix& involution);
bool is_free_involution(const BitMatrix& involution);

// Higman's criterion: m is a summand of a module induced from the subgroup.
bool is_relatively_projective(const Rep& m, SubgroupId s);

// Elements of a subgroup as dihedral element indices (see dihedral_table).
std::vector<std::size_t> subgroup_elements(SubgroupId s, QParam q);

}  // namespace dihedral
