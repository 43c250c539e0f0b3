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

// Krull-Schmidt machinery over the dihedral group algebra: hom spaces,
// isomorphism tests, Fitting decomposition with locality certificates and
// identification of indecomposable summands.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dihedral/klein.hpp"
#include "dihedral/modules.hpp"
#include "dihedral/word.hpp"

namespace dihedral {

// Intertwiners H (dim m x dim n) with x_m H = H x_n and y_m H = H y_n.
struct HomSpace {
  std::vector<BitMatrix> basis;
  std::size_t dim() const { return basis.size(); }
};
HomSpace hom_space(const Rep& m, const Rep& n);

// Cheap isomorphism invariants: dimension, ranks of x+1, y+1, z+1 and both
// Klein decompositions.
struct IsoInvariants {
  std::size_t dim = 0;
  std::size_t rx = 0, ry = 0, rz = 0;
  KleinProfile profile;
  friend bool operator==(const IsoInvariants&, const IsoInvariants&) = default;
};
IsoInvariants iso_invariants(const Rep& m);

enum class IsoVerdict { kIsomorphic, kNotIsomorphic, kNotDecided };
const char* to_string(IsoVerdict v);

// Exhaustive over Hom(m, n) when its dimension is at most 16, otherwise at
// least 128 seeded random combinations; an unproved negative is kNotDecided.
IsoVerdict is_isomorphic(const Rep& m, const Rep& n, std::uint64_t seed = 1);
inline bool isomorphic(const Rep& m, const Rep& n, std::uint64_t seed = 1) {
  return is_isomorphic(m, n, seed) == IsoVerdict::kIsomorphic;
}

enum class Locality { kLocal, kNotLocal, kUnknown };

// Decides whether End(m) is local. kNotLocal comes with a splitting
// endomorphism when one was found.
struct LocalityResult {
  Locality verdict = Locality::kUnknown;
  std::optional<BitMatrix> splitter;  // phi with 0 < rank(phi^N) < dim
};
LocalityResult certify_local(const Rep& m, std::uint64_t seed = 1);

struct IdTag {
  // kString without a word: a non-projective, non-band indecomposable
  // whose word was not recovered within budget.
  enum class Kind { kStringWord, kString, kBand, kProjective, kUnidentified };
  Kind kind = Kind::kUnidentified;
  std::optional<Word> word;

  bool is_string() const { return kind == Kind::kStringWord || kind == Kind::kString; }
  std::string to_string() const;
};

struct IdentifyOptions {
  std::size_t budget = 100000;  // candidate words examined
  std::size_t max_word_length = 16;
  std::uint64_t seed = 1;
};
// n must be indecomposable.
IdTag identify_summand(const Rep& n, const IdentifyOptions& opts = {});

struct DecomposedSummand {
  Rep module;
  std::size_t multiplicity = 1;
  IdTag tag;
  bool certified = false;
};

struct DecompositionReport {
  std::vector<DecomposedSummand> summands;
  std::uint64_t seed = 1;
  std::size_t dim = 0;
  bool all_certified() const;
  std::size_t count(std::size_t summand_dim) const;
  std::size_t total_summands() const;
};

struct DecomposeOptions {
  std::uint64_t seed = 1;
  // Without word recovery only the kind (and K) is reported.
  bool identify = true;
  IdentifyOptions identify_options{};
};

// Summands whose locality could not be certified are tagged kUnidentified.
DecompositionReport fitting_decompose(const Rep& m, const DecomposeOptions& opts = {});

struct Piece {
  Rep module;
  bool certified = false;
};
// The indecomposable summands, ungrouped and unidentified.
std::vector<Piece> split_indecomposables(const Rep& m, std::uint64_t seed = 1);

// Pairwise non-isomorphic modules with cached invariants.
class IsoRegistry {
 public:
  explicit IsoRegistry(std::uint64_t seed = 1) : seed_(seed) {}
  std::optional<std::size_t> find(const Rep& m) const;
  // Index of the class of m, adding it if new.
  std::pair<std::size_t, bool> insert(const Rep& m);
  std::size_t size() const { return modules_.size(); }
  const Rep& at(std::size_t k) const { return modules_[k]; }

 private:
  std::optional<std::size_t> find(const Rep& m, const IsoInvariants& key) const;
  std::uint64_t seed_;
  std::vector<Rep> modules_;
  std::vector<IsoInvariants> keys_;
};

// Reassembles the direct sum of a report.
Rep reassemble(const DecompositionReport& r, QParam q);

}  // namespace dihedral
