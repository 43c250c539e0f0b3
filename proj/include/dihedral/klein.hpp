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

// Klein four modules: complete decomposition by reduction of the Kronecker
// pencil (top -> radical) and the signature invariant of dihedral modules.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dihedral/modules.hpp"
#include "dihedral/poly2.hpp"

namespace dihedral {

struct KleinSummand {
  enum class Kind { kOmega, kFree, kPeriodic, kPeriodicInfinity };

  Kind kind = Kind::kOmega;
  int n = 0;              // Omega index; Omega(0) is K
  Poly2 poly;             // irreducible, for kPeriodic
  std::size_t power = 0;  // for kPeriodic and kPeriodicInfinity

  static KleinSummand omega(int n) { return {Kind::kOmega, n, {}, 0}; }
  static KleinSummand free() { return {Kind::kFree, 0, {}, 0}; }
  static KleinSummand periodic(Poly2 f, std::size_t m) { return {Kind::kPeriodic, 0, std::move(f), m}; }
  static KleinSummand periodic_infinity(std::size_t m) { return {Kind::kPeriodicInfinity, 0, {}, m}; }

  std::size_t dim() const;
  std::string to_string() const;

  friend bool operator==(const KleinSummand&, const KleinSummand&) = default;
  friend bool operator<(const KleinSummand& a, const KleinSummand& b);
};

// Multiset of summands.
class KleinDecomposition {
 public:
  void add(const KleinSummand& s, std::size_t mult = 1);
  void merge(const KleinDecomposition& other);

  const std::map<KleinSummand, std::size_t>& terms() const { return terms_; }
  std::size_t dim() const;
  std::size_t multiplicity(const KleinSummand& s) const;
  std::size_t free_rank() const { return multiplicity(KleinSummand::free()); }
  // Omega indices with multiplicity, ascending.
  std::vector<int> omega_indices() const;
  bool has_omega() const { return !omega_indices().empty(); }

  // Omega(n) -> Omega(-n); used for duals.
  KleinDecomposition negated() const;
  // Omega(n) -> Omega(n + k); free summands dropped.
  KleinDecomposition shifted(int k) const;
  KleinDecomposition without_free() const;

  std::string to_string() const;

  friend bool operator==(const KleinDecomposition&, const KleinDecomposition&) = default;

 private:
  std::map<KleinSummand, std::size_t> terms_;
};

struct KleinFreeSplit {
  std::size_t free_rank = 0;
  KleinRep complement;
};
KleinFreeSplit split_free(const KleinRep& m);

// Requires (g1 + 1)(g2 + 1) = 0, else Error(kPreconditionViolated).
KleinDecomposition pencil_reduce(const KleinRep& m);
KleinDecomposition klein_decompose(const KleinRep& m);

KleinRep klein_trivial();
KleinRep klein_regular();
KleinRep klein_direct_sum(const KleinRep& a, const KleinRep& b);
KleinRep klein_tensor(const KleinRep& a, const KleinRep& b);
KleinRep klein_dual(const KleinRep& m);
// steps < 0: syzygies; steps > 0: cosyzygies; free summands removed.
KleinRep klein_heller(const KleinRep& m, int steps);

struct Signature {
  int r = 0;
  int s = 0;  // r <= s

  static Signature of(int a, int b) { return a <= b ? Signature{a, b} : Signature{b, a}; }
  std::string to_string() const;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct SignatureResult {
  Signature signature;
  SubgroupId active = SubgroupId::kKleinY;
  KleinDecomposition on_x;
  KleinDecomposition on_y;
};

// Throws Error(kNotSignatureEligible) unless exactly one Klein restriction
// has Omega summands and it has exactly two.
SignatureResult signature_of(const Rep& m);

// Both Klein restrictions, decomposed.
struct KleinProfile {
  KleinDecomposition on_x;
  KleinDecomposition on_y;
  friend bool operator==(const KleinProfile&, const KleinProfile&) = default;
};
KleinProfile klein_profile(const Rep& m);

// No Omega summand on either Klein restriction. Projective summands are
// ignored, so a projective module counts as periodic here.
bool is_periodic(const Rep& m);

}  // namespace dihedral
