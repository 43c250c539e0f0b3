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

#include "dihedral/algebraic.hpp"

#include <algorithm>
#include <cstdlib>

#include "dihedral/error.hpp"
#include "dihedral/parallel.hpp"

namespace dihedral {
namespace {

std::optional<Signature> try_signature(const Rep& m) {
  if (m.dim() % 2 != 0) return std::nullopt;
  try {
    return signature_of(m).signature;
  } catch (const Error&) {
    return std::nullopt;
  }
}

int magnitude(const Signature& s) { return std::max(std::abs(s.r), std::abs(s.s)); }

}  // namespace

const char* to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::kClosed: return "closed";
    case ProbeVerdict::kBudgetExceeded: return "budget_exceeded";
    case ProbeVerdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

bool ProbeReport::signatures_grow() const {
  std::optional<int> prev;
  std::size_t steps = 0;
  for (const auto& r : trace) {
    if (r.round == 0 || r.new_classes.empty()) continue;
    if (!r.max_signature) return false;
    if (prev && *r.max_signature <= *prev) return false;
    prev = r.max_signature;
    ++steps;
  }
  return steps > 0;
}

ProbeReport tensor_closure_probe(const Rep& seed_module, const ProbeOptions& opts) {
  ProbeReport rep;
  rep.budget = opts.budget;
  rep.seed = opts.seed;
  const QParam q = seed_module.q();
  IsoRegistry registry(opts.seed);
  DecomposeOptions dopts;
  dopts.seed = opts.seed;
  dopts.identify_options.seed = opts.seed;
  dopts.identify_options.max_word_length = 12;

  auto add_class = [&](const Rep& m, const IdTag& tag, std::size_t round) -> std::optional<std::size_t> {
    auto [idx, fresh] = registry.insert(m);
    if (!fresh) return std::nullopt;
    rep.classes.push_back({m, tag, try_signature(m), round});
    return idx;
  };

  ProbeRound initial;
  if (auto k = add_class(trivial_module(q), {IdTag::Kind::kStringWord, Word()}, 0)) initial.new_classes.push_back(*k);
  const DecompositionReport seed_parts = fitting_decompose(seed_module, dopts);
  if (!seed_parts.all_certified()) {
    rep.verdict = ProbeVerdict::kInconclusive;
    rep.reason = "seed decomposition could not be certified";
    return rep;
  }
  std::vector<Rep> seeds;
  for (const auto& s : seed_parts.summands) {
    seeds.push_back(s.module);
    if (auto k = add_class(s.module, s.tag, 0)) initial.new_classes.push_back(*k);
  }
  rep.trace.push_back(initial);
  std::vector<std::size_t> frontier = initial.new_classes;

  for (std::size_t round = 1; round <= opts.budget.max_rounds; ++round) {
    rep.rounds = round;
    std::vector<std::pair<std::size_t, std::size_t>> jobs;  // (class, seed summand)
    for (std::size_t c : frontier) {
      for (std::size_t s = 0; s < seeds.size(); ++s) jobs.push_back({c, s});
    }
    if (opts.reverse_order) std::reverse(jobs.begin(), jobs.end());
    for (const auto& [c, s] : jobs) {
      if (rep.classes[c].module.dim() * seeds[s].dim() > opts.budget.max_dim) {
        rep.verdict = ProbeVerdict::kBudgetExceeded;
        rep.reason = "tensor product exceeds max_dim " + std::to_string(opts.budget.max_dim);
        return rep;
      }
    }
    std::vector<DecompositionReport> parts(jobs.size());
    parallel_for(jobs.size(), opts.jobs, [&](std::size_t k) {
      parts[k] = fitting_decompose(tensor(rep.classes[jobs[k].first].module, seeds[jobs[k].second]), dopts);
    });
    ProbeRound r;
    r.round = round;
    for (const auto& p : parts) {
      if (!p.all_certified()) {
        rep.verdict = ProbeVerdict::kInconclusive;
        rep.reason = "a tensor summand could not be certified indecomposable";
        return rep;
      }
      for (const auto& s : p.summands) {
        if (auto k = add_class(s.module, s.tag, round)) r.new_classes.push_back(*k);
      }
    }
    for (std::size_t k : r.new_classes) {
      if (const auto& sig = rep.classes[k].signature) {
        r.max_signature = std::max(r.max_signature.value_or(magnitude(*sig)), magnitude(*sig));
      }
    }
    rep.trace.push_back(r);
    if (r.new_classes.empty()) {
      rep.verdict = ProbeVerdict::kClosed;
      rep.reason = "round " + std::to_string(round) + " added no class";
      break;
    }
    if (rep.classes.size() > opts.budget.max_classes) {
      rep.verdict = ProbeVerdict::kBudgetExceeded;
      rep.reason = "more than " + std::to_string(opts.budget.max_classes) + " classes";
      return rep;
    }
    frontier = r.new_classes;
  }
  if (rep.verdict != ProbeVerdict::kClosed) {
    rep.verdict = ProbeVerdict::kBudgetExceeded;
    rep.reason = "still growing after " + std::to_string(opts.budget.max_rounds) + " rounds";
    return rep;
  }

  if (opts.verify) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < rep.classes.size(); ++a) {
      for (std::size_t b = a; b < rep.classes.size(); ++b) {
        if (rep.classes[a].module.dim() * rep.classes[b].module.dim() <= opts.budget.max_dim) {
          pairs.push_back({a, b});
        }
      }
    }
    std::vector<char> ok(pairs.size(), 1);
    DecomposeOptions quick = dopts;
    quick.identify = false;
    parallel_for(pairs.size(), opts.jobs, [&](std::size_t k) {
      const auto p = fitting_decompose(
          tensor(rep.classes[pairs[k].first].module, rep.classes[pairs[k].second].module), quick);
      for (const auto& s : p.summands) {
        if (!s.certified || !registry.find(s.module)) ok[k] = 0;
      }
    });
    rep.verified = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  }
  return rep;
}

}  // namespace dihedral
