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

// Tensor-power closure probe. A module is algebraic iff the summands of its
// tensor powers fall into finitely many isomorphism classes; the probe can
// prove closure but only ever reports growth as evidence.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dihedral/iso.hpp"
#include "dihedral/klein.hpp"

namespace dihedral {

struct ProbeBudget {
  std::size_t max_dim = 256;
  std::size_t max_classes = 64;
  std::size_t max_rounds = 8;
};

struct ProbeOptions {
  ProbeBudget budget{};
  std::uint64_t seed = 1;
  std::size_t jobs = 0;
  bool reverse_order = false;  // process each frontier back to front
  bool verify = true;          // closing pass over all pairs of classes
};

struct ProbeClass {
  Rep module;
  IdTag tag;
  std::optional<Signature> signature;
  std::size_t round = 0;  // round that produced it (0 = initial)
};

struct ProbeRound {
  std::size_t round = 0;
  std::vector<std::size_t> new_classes;  // indices into classes
  // Largest |Omega index| among the new signatures, if any.
  std::optional<int> max_signature;
};

enum class ProbeVerdict { kClosed, kBudgetExceeded, kInconclusive };
const char* to_string(ProbeVerdict v);

struct ProbeReport {
  ProbeVerdict verdict = ProbeVerdict::kInconclusive;
  std::string reason;
  std::vector<ProbeClass> classes;
  std::vector<ProbeRound> trace;
  ProbeBudget budget;
  std::uint64_t seed = 1;
  std::size_t rounds = 0;
  std::optional<bool> verified;  // set for kClosed when verify is on

  // Signature magnitudes strictly increase over the rounds that add classes.
  bool signatures_grow() const;
};

ProbeReport tensor_closure_probe(const Rep& seed_module, const ProbeOptions& opts = {});

}  // namespace dihedral
