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

#include "dihedral/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "dihedral/error.hpp"
#include "dihedral/iso.hpp"
#include "dihedral/parallel.hpp"

namespace dihedral {

std::string Coordinate::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

namespace {

Word step(const Word& w, bool left, int dir, QParam q) {
  if (left) return dir > 0 ? apply_l(w, q) : apply_l_inverse(w, q);
  return dir > 0 ? apply_r(w, q) : apply_r_inverse(w, q);
}

std::optional<Word> walk(const Word& w, Coordinate c, QParam q, bool l_first) {
  try {
    Word cur = w;
    for (int pass = 0; pass < 2; ++pass) {
      const bool left = (pass == 0) == l_first;
      const int n = left ? c.i : c.j;
      for (int k = 0; k < std::abs(n); ++k) cur = step(cur, left, n > 0 ? 1 : -1, q);
    }
    return cur;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kOperatorUndefined || e.code() == ErrorCode::kAmbiguousOperator) {
      return std::nullopt;
    }
    throw;
  }
}

}  // namespace

std::optional<Word> coordinate_word(const Word& w, Coordinate c, QParam q) {
  if (auto r = walk(w, c, q, true)) return r;
  return walk(w, c, q, false);
}

VertexModule coordinate_module(const Word& w, Coordinate c, QParam q) {
  if (!validate_word(w, q)) throw Error(ErrorCode::kInvalidWord, "'" + to_string(w) + "' is not in W_q");
  if (auto word = coordinate_word(w, c, q)) {
    return {string_module(*word, q), word, VertexPath::kWord, ""};
  }
  const int span = std::abs(c.i) + std::abs(c.j) + 2;
  for (int mag = 1; mag <= span; ++mag) {
    for (int k : {mag, -mag}) {
      const Coordinate from{c.i - k, c.j - k};
      if (auto word = coordinate_word(w, from, q)) {
        Rep m = heller(string_module(*word, q), -2 * k);
        return {std::move(m), std::nullopt, VertexPath::kHomological,
                "Omega^" + std::to_string(2 * k) + " of " + from.to_string()};
      }
    }
  }
  throw Error(ErrorCode::kUnreachable, "no word or homological path reaches " + c.to_string());
}

bool check_diamond(const Rep& a, const Rep& b, const Rep& c, const Rep& d, SubgroupId s) {
  KleinDecomposition ends = klein_decompose(restrict_klein(a, s));
  ends.merge(klein_decompose(restrict_klein(d, s)));
  KleinDecomposition mids = klein_decompose(restrict_klein(b, s));
  mids.merge(klein_decompose(restrict_klein(c, s)));
  const std::size_t order = static_cast<std::size_t>(a.q().group_order());
  if (a.dim() + d.dim() == b.dim() + c.dim() + order) {
    mids.merge(klein_decompose(restrict_klein(regular_module(a.q()), s)));
  }
  return ends == mids;
}

const char* to_string(Pattern p) {
  switch (p) {
    case Pattern::kDiagonalBoth: return "(i)";
    case Pattern::kDiagonalI: return "(ii)";
    case Pattern::kDiagonalJ: return "(iii)";
    case Pattern::kNone: return "none";
  }
  return "?";
}

const char* to_string(DiamondReport::Status s) {
  switch (s) {
    case DiamondReport::Status::kHolds: return "holds";
    case DiamondReport::Status::kFails: return "fails";
    case DiamondReport::Status::kSkipped: return "skipped";
    case DiamondReport::Status::kUnavailable: return "unavailable";
  }
  return "?";
}

Pattern classify_pattern(const std::map<Coordinate, Signature>& grid, Signature base) {
  auto all = [&](auto expected) {
    return std::all_of(grid.begin(), grid.end(),
                       [&](const auto& kv) { return kv.second == expected(kv.first); });
  };
  const int r = base.r;
  const int s = base.s;
  if (all([&](Coordinate c) { return Signature::of(r + 2 * c.i, s + 2 * c.j); }) ||
      all([&](Coordinate c) { return Signature::of(s + 2 * c.i, r + 2 * c.j); })) {
    return Pattern::kDiagonalBoth;
  }
  if (all([&](Coordinate c) { return Signature::of(r + 2 * c.i, s + 2 * c.i); })) return Pattern::kDiagonalI;
  if (all([&](Coordinate c) { return Signature::of(r + 2 * c.j, s + 2 * c.j); })) return Pattern::kDiagonalJ;
  return Pattern::kNone;
}

const VertexReport* SweepReport::vertex(Coordinate c) const {
  for (const auto& v : vertices) {
    if (v.at == c) return &v;
  }
  return nullptr;
}

std::size_t SweepReport::count(DiamondReport::Status s) const {
  return static_cast<std::size_t>(
      std::count_if(diamonds.begin(), diamonds.end(), [s](const auto& d) { return d.status == s; }));
}

bool SweepReport::all_signatures_odd() const {
  return std::all_of(vertices.begin(), vertices.end(), [](const VertexReport& v) {
    return !v.available || (v.signature.r % 2 != 0 && v.signature.s % 2 != 0);
  });
}

std::string SweepReport::to_dot() const {
  std::ostringstream out;
  auto id = [](Coordinate c) { return "\"" + c.to_string() + "\""; };
  out << "digraph component {\n";
  out << "  label=\"" << to_string(base) << " q=" << q << " pattern " << dihedral::to_string(pattern)
      << "\";\n";
  for (const auto& v : vertices) {
    out << "  " << id(v.at) << " [label=\"" << v.at.to_string() << " ";
    out << (v.available ? v.signature.to_string() : "unavailable") << "\"";
    if (v.path == VertexPath::kHomological) out << ", style=dashed";
    out << "];\n";
  }
  for (const auto& v : vertices) {
    for (Coordinate n : {Coordinate{v.at.i + 1, v.at.j}, Coordinate{v.at.i, v.at.j + 1}}) {
      if (vertex(n) != nullptr) out << "  " << id(n) << " -> " << id(v.at) << ";\n";
    }
  }
  for (const auto& d : diamonds) {
    out << "  // diamond " << d.end.to_string() << " " << dihedral::to_string(d.status) << "\n";
  }
  out << "}\n";
  return out.str();
}

SweepReport sweep_component(const Word& w, QParam q, const SweepOptions& opts) {
  SweepReport rep;
  rep.base = w;
  rep.q = q.value();
  rep.radius = opts.radius;
  const int r = opts.radius;
  std::vector<Coordinate> coords;
  for (int i = -r; i <= r; ++i) {
    for (int j = -r; j <= r; ++j) coords.push_back({i, j});
  }
  std::vector<std::optional<Rep>> mods(coords.size());
  rep.vertices.resize(coords.size());
  parallel_for(coords.size(), opts.jobs, [&](std::size_t k) {
    VertexReport& v = rep.vertices[k];
    v.at = coords[k];
    try {
      VertexModule vm = coordinate_module(w, coords[k], q);
      v.path = vm.path;
      v.word = vm.word;
      v.dim = vm.module.dim();
      const SignatureResult s = signature_of(vm.module);
      v.signature = s.signature;
      v.active = s.active;
      v.available = true;
      v.y_projective = is_relatively_projective(vm.module, s.active);
      mods[k] = std::move(vm.module);
    } catch (const Error& e) {
      v.available = false;
      v.reason = std::string(error_code_name(e.code())) + ": " + e.what();
    }
  });
  auto index = [&](Coordinate c) -> std::optional<std::size_t> {
    if (std::abs(c.i) > r || std::abs(c.j) > r) return std::nullopt;
    return static_cast<std::size_t>((c.i + r) * (2 * r + 1) + (c.j + r));
  };

  std::vector<Coordinate> ends;
  for (int i = -r; i < r; ++i) {
    for (int j = -r; j < r; ++j) ends.push_back({i, j});
  }
  rep.diamonds.resize(ends.size());
  parallel_for(ends.size(), opts.jobs, [&](std::size_t k) {
    const Coordinate c = ends[k];
    DiamondReport& d = rep.diamonds[k];
    d.end = c;
    const std::size_t ia = *index(c);
    const std::size_t ib = *index({c.i, c.j + 1});
    const std::size_t ic = *index({c.i + 1, c.j});
    const std::size_t id = *index({c.i + 1, c.j + 1});
    for (std::size_t x : {ia, ib, ic, id}) {
      if (!mods[x]) {
        d.status = DiamondReport::Status::kUnavailable;
        d.reason = "vertex " + rep.vertices[x].at.to_string() + " unavailable";
        return;
      }
    }
    const VertexReport& va = rep.vertices[ia];
    if (va.y_projective) {
      d.status = DiamondReport::Status::kSkipped;
      d.reason = "vertex of " + c.to_string() + " lies in " + to_string(va.active);
      return;
    }
    const bool ok = check_diamond(*mods[ia], *mods[ib], *mods[ic], *mods[id], va.active);
    d.status = ok ? DiamondReport::Status::kHolds : DiamondReport::Status::kFails;
  });

  if (opts.check_omega2) {
    std::vector<std::size_t> targets;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      const auto prev = index({coords[k].i - 1, coords[k].j - 1});
      if (prev && mods[k] && mods[*prev]) targets.push_back(k);
    }
    std::vector<char> ok(targets.size(), 0);
    parallel_for(targets.size(), opts.jobs, [&](std::size_t t) {
      const std::size_t k = targets[t];
      const Rep& prev = *mods[*index({coords[k].i - 1, coords[k].j - 1})];
      ok[t] = isomorphic(*mods[k], heller(prev, -2), opts.seed) ? 1 : 0;
    });
    rep.omega2_checked = targets.size();
    rep.omega2_failed = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 0));
  }

  std::map<Coordinate, Signature> grid;
  for (const auto& v : rep.vertices) {
    if (!v.available) continue;
    grid[v.at] = v.signature;
    if (v.signature == Signature{0, 0}) ++rep.zero_signatures;
  }
  if (const VertexReport* o = rep.vertex({0, 0}); o != nullptr && o->available) {
    rep.base_signature = o->signature;
    rep.pattern = classify_pattern(grid, o->signature);
    rep.diagonal_ok = true;
    for (int i = -r; i <= r; ++i) {
      const VertexReport* v = rep.vertex({i, i});
      if (v == nullptr || !v->available ||
          !(v->signature == Signature::of(o->signature.r + 2 * i, o->signature.s + 2 * i))) {
        rep.diagonal_ok = false;
      }
    }
  }
  return rep;
}

}  // namespace dihedral
