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

// Walking a ZA_infinity^infinity component of the stable Auslander-Reiten
// quiver: vertex (i, j) is M(w L^i R^j), with signatures, the restriction
// diamond rule and the classification of the signature pattern.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dihedral/klein.hpp"
#include "dihedral/modules.hpp"
#include "dihedral/word.hpp"

namespace dihedral {

struct Coordinate {
  int i = 0;
  int j = 0;
  std::string to_string() const;
  friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

enum class VertexPath { kWord, kHomological };

struct VertexModule {
  Rep module;
  std::optional<Word> word;  // set for the word path
  VertexPath path = VertexPath::kWord;
  std::string note;  // how a homological vertex was reached
};

// Word path first (L before R, then R before L); otherwise the word path to
// (i - k, j - k) followed by Omega^{2k}. Throws Error(kUnreachable).
VertexModule coordinate_module(const Word& w, Coordinate c, QParam q);

// The word reached from w by the word operators alone, if defined.
std::optional<Word> coordinate_word(const Word& w, Coordinate c, QParam q);

// A (i,j), B (i,j+1), C (i+1,j), D (i+1,j+1): compares A + D with B + C on
// the subgroup. If the dimensions differ by 4q the regular module is added to
// the B + C side (the sequence ending at A has a projective middle term).
bool check_diamond(const Rep& a, const Rep& b, const Rep& c, const Rep& d, SubgroupId s);

enum class Pattern { kDiagonalBoth, kDiagonalI, kDiagonalJ, kNone };
// "(i)" [2i,2j], "(ii)" [2i,2i], "(iii)" [2j,2j], relative to the base signature.
const char* to_string(Pattern p);

struct VertexReport {
  Coordinate at;
  bool available = false;
  std::string reason;  // when unavailable
  VertexPath path = VertexPath::kWord;
  std::optional<Word> word;
  std::size_t dim = 0;
  Signature signature;
  SubgroupId active = SubgroupId::kKleinY;
  bool y_projective = false;  // relatively projective for the active subgroup
};

struct DiamondReport {
  Coordinate end;  // the vertex (i, j); its translate is (i+1, j+1)
  enum class Status { kHolds, kFails, kSkipped, kUnavailable } status = Status::kUnavailable;
  std::string reason;
};
const char* to_string(DiamondReport::Status s);

struct SweepOptions {
  int radius = 2;
  std::size_t jobs = 0;
  std::uint64_t seed = 1;
  // Compare every vertex with Omega^2 of its (i-1, j-1) neighbour.
  bool check_omega2 = true;
};

struct SweepReport {
  Word base;
  int q = 2;
  int radius = 0;
  std::vector<VertexReport> vertices;  // row-major over i, then j
  std::vector<DiamondReport> diamonds;
  Pattern pattern = Pattern::kNone;
  std::optional<Signature> base_signature;
  std::size_t zero_signatures = 0;
  bool diagonal_ok = false;  // signature(i,i) = base + [2i,2i]
  std::size_t omega2_checked = 0;
  std::size_t omega2_failed = 0;

  const VertexReport* vertex(Coordinate c) const;
  std::size_t count(DiamondReport::Status s) const;
  bool all_signatures_odd() const;
  std::string to_dot() const;
};

// Pattern of a signature grid; exposed for the formal check that all three
// candidate patterns obey the diamond rule.
Pattern classify_pattern(const std::map<Coordinate, Signature>& grid, Signature base);

SweepReport sweep_component(const Word& w, QParam q, const SweepOptions& opts = {});

}  // namespace dihedral
