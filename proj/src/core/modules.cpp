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

#include "dihedral/modules.hpp"

#include <algorithm>
#include <cassert>

#include "dihedral/error.hpp"

namespace dihedral {
namespace {

std::size_t half_order(QParam q) { return 2 * static_cast<std::size_t>(q.value()); }

// Product of dihedral elements in the x^a (xy)^k normal form.
std::size_t dihedral_mul(QParam q, std::size_t e, std::size_t f) {
  const std::size_t half = half_order(q);
  const std::size_t a1 = e / half;
  const std::size_t k1 = e % half;
  const std::size_t a2 = f / half;
  const std::size_t k2 = f % half;
  const std::size_t k = ((a2 != 0 ? (half - k1) % half : k1) + k2) % half;
  return (a1 ^ a2) * half + k;
}

void require_same_q(const Rep& a, const Rep& b) {
  if (!(a.q() == b.q())) {
    throw Error(ErrorCode::kQMismatch, "modules belong to different dihedral groups");
  }
}

// Right coset representatives H t, smallest element index first.
std::vector<std::size_t> right_transversal(SubgroupId s, QParam q) {
  const std::vector<std::size_t> h = subgroup_elements(s, q);
  const std::size_t order = static_cast<std::size_t>(q.group_order());
  std::vector<bool> covered(order, false);
  std::vector<std::size_t> reps;
  for (std::size_t e = 0; e < order; ++e) {
    if (covered[e]) continue;
    reps.push_back(e);
    for (std::size_t x : h) covered[dihedral_mul(q, x, e)] = true;
  }
  return reps;
}

}  // namespace

Rep::Rep(QParam q, BitMatrix x, BitMatrix y) : q_(q), x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.rows();
  if (x_.cols() != n || y_.rows() != n || y_.cols() != n) {
    throw Error(ErrorCode::kPreconditionViolated, "generator matrices must be square of equal size");
  }
  const BitMatrix id = BitMatrix::identity(n);
  if (!(x_ * x_ == id) || !(y_ * y_ == id)) {
    throw Error(ErrorCode::kPreconditionViolated, "generators must be involutions");
  }
  if (!(x_ * y_).pow(static_cast<std::uint64_t>(2 * q.value())).is_identity()) {
    throw Error(ErrorCode::kPreconditionViolated, "(xy)^(2q) is not the identity");
  }
}

BitMatrix Rep::z() const { return (x_ * y_).pow(static_cast<std::uint64_t>(q_.value())); }

GroupModule Rep::as_group_module() const { return {&dihedral_table(q_.value()), {x_, y_}}; }

Rep Rep::from_group_module(QParam q, const GroupModule& m) { return Rep(q, m.gens[0], m.gens[1]); }

GroupModule KleinRep::as_group_module() const { return {&klein_table(), {g1, g2}}; }

KleinRep KleinRep::from_group_module(const GroupModule& m) { return {m.gens[0], m.gens[1]}; }

bool KleinRep::valid() const {
  const std::size_t n = dim();
  if (g1.cols() != n || g2.rows() != n || g2.cols() != n) return false;
  return (g1 * g1).is_identity() && (g2 * g2).is_identity() && g1 * g2 == g2 * g1;
}

std::string to_string(SubgroupId s) {
  switch (s) {
    case SubgroupId::kGenX: return "x";
    case SubgroupId::kGenY: return "y";
    case SubgroupId::kKleinX: return "X";
    case SubgroupId::kKleinY: return "Y";
  }
  return "?";
}

SubgroupId parse_subgroup(const std::string& text) {
  if (text == "x" || text == "GenX") return SubgroupId::kGenX;
  if (text == "y" || text == "GenY") return SubgroupId::kGenY;
  if (text == "X" || text == "KleinX") return SubgroupId::kKleinX;
  if (text == "Y" || text == "KleinY") return SubgroupId::kKleinY;
  throw Error(ErrorCode::kParseError, "unknown subgroup '" + text + "' (expected x, y, X or Y)");
}

std::vector<std::size_t> subgroup_elements(SubgroupId s, QParam q) {
  const std::size_t half = half_order(q);
  const std::size_t qq = static_cast<std::size_t>(q.value());
  switch (s) {
    case SubgroupId::kGenX: return {0, half};
    case SubgroupId::kGenY: return {0, half + 1};
    // 1, x, z, xz   and   1, y, z, yz
    case SubgroupId::kKleinX: return {0, half, qq, half + qq};
    case SubgroupId::kKleinY: return {0, half + 1, qq, half + 1 + qq};
  }
  return {};
}

Rep trivial_module(QParam q) { return Rep(q, BitMatrix::identity(1), BitMatrix::identity(1)); }

Rep string_module(const Word& w, QParam q) {
  if (!validate_word(w, q)) {
    throw Error(ErrorCode::kInvalidWord, "'" + to_string(w) + "' is not in W_" + std::to_string(q.value()));
  }
  const std::size_t n = w.length() + 1;
  BitMatrix x = BitMatrix::identity(n);
  BitMatrix y = BitMatrix::identity(n);
  for (std::size_t i = 0; i < w.length(); ++i) {
    BitMatrix& g = w[i].symbol == Symbol::kA ? x : y;
    if (w[i].inverse) {
      g.set(i, i + 1);  // v_i -> v_i + v_{i+1}
    } else {
      g.set(i + 1, i);  // v_{i+1} -> v_i + v_{i+1}
    }
  }
  return Rep(q, std::move(x), std::move(y));
}

Rep band_module(const Word& cw, const BitMatrix& phi, QParam q) {
  const std::size_t n = cw.length();
  if (n < 2 || n % 2 != 0) throw Error(ErrorCode::kInvalidBand, "band word must have even positive length");
  const bool has_direct = std::any_of(cw.letters().begin(), cw.letters().end(),
                                      [](const Letter& l) { return !l.inverse; });
  const bool has_inverse = std::any_of(cw.letters().begin(), cw.letters().end(),
                                       [](const Letter& l) { return l.inverse; });
  if (!has_direct || !has_inverse) {
    throw Error(ErrorCode::kInvalidBand, "band word needs both a direct and an inverse letter");
  }
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < n && periodic; ++i) periodic = cw[i] == cw[(i + d) % n];
    if (periodic) throw Error(ErrorCode::kInvalidBand, "band word is a proper power");
  }
  const auto doubled = concat(cw, cw);
  if (!doubled || !validate_word(*doubled, q)) {
    throw Error(ErrorCode::kInvalidBand, "a cyclic shift of the band word leaves W_q");
  }
  if (phi.rows() != phi.cols() || phi.rows() == 0 || !is_invertible(phi)) {
    throw Error(ErrorCode::kNotInvertible, "band parameter must be an invertible square matrix");
  }
  const std::size_t d = phi.rows();
  BitMatrix x = BitMatrix::identity(n * d);
  BitMatrix y = BitMatrix::identity(n * d);
  const BitMatrix id = BitMatrix::identity(d);
  for (std::size_t i = 0; i < n; ++i) {
    BitMatrix& g = cw[i].symbol == Symbol::kA ? x : y;
    const std::size_t from = i;
    const std::size_t to = (i + 1) % n;
    const BitMatrix& link = (i + 1 == n) ? phi : id;
    if (cw[i].inverse) {
      g.set_block(from * d, to * d, link);
    } else {
      g.set_block(to * d, from * d, link);
    }
  }
  return Rep(q, std::move(x), std::move(y));
}

Rep regular_module(QParam q) {
  const auto gens = regular_generators(dihedral_table(q.value()));
  return Rep(q, gens[0], gens[1]);
}

Restriction restrict(const Rep& m, SubgroupId s) {
  switch (s) {
    case SubgroupId::kGenX: return {s, {m.x()}};
    case SubgroupId::kGenY: return {s, {m.y()}};
    case SubgroupId::kKleinX: return {s, {m.x(), m.z()}};
    case SubgroupId::kKleinY: return {s, {m.y(), m.z()}};
  }
  return {s, {}};
}

KleinRep restrict_klein(const Rep& m, SubgroupId s) {
  if (s != SubgroupId::kKleinX && s != SubgroupId::kKleinY) {
    throw Error(ErrorCode::kUnsupportedSubgroup, "not a Klein four subgroup");
  }
  const Restriction r = restrict(m, s);
  return {r.gens[0], r.gens[1]};
}

Rep induce(const KleinRep& m, SubgroupId s, QParam q) {
  if (s != SubgroupId::kKleinX && s != SubgroupId::kKleinY) {
    throw Error(ErrorCode::kUnsupportedSubgroup, "induction is implemented from X and Y only");
  }
  if (!m.valid()) throw Error(ErrorCode::kPreconditionViolated, "not a Klein four module");
  const std::vector<std::size_t> h = subgroup_elements(s, q);
  const std::vector<BitMatrix> hmats = {BitMatrix::identity(m.dim()), m.g1, m.g2, m.g1 * m.g2};
  const std::vector<std::size_t> reps = right_transversal(s, q);
  const std::size_t d = m.dim();
  const std::size_t half = half_order(q);
  const GroupTable& table = dihedral_table(q.value());
  std::vector<BitMatrix> gens;
  for (std::size_t gen : {half, half + 1}) {  // x, y
    BitMatrix big(reps.size() * d, reps.size() * d);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const std::size_t p = dihedral_mul(q, reps[i], gen);
      bool placed = false;
      for (std::size_t j = 0; j < reps.size() && !placed; ++j) {
        const std::size_t hh = dihedral_mul(q, p, table.inverse[reps[j]]);
        const auto it = std::find(h.begin(), h.end(), hh);
        if (it == h.end()) continue;
        big.set_block(i * d, j * d, hmats[static_cast<std::size_t>(it - h.begin())]);
        placed = true;
      }
      assert(placed);
    }
    gens.push_back(std::move(big));
  }
  return Rep(q, gens[0], gens[1]);
}

Rep tensor(const Rep& a, const Rep& b) {
  require_same_q(a, b);
  return Rep(a.q(), kronecker_product(a.x(), b.x()), kronecker_product(a.y(), b.y()));
}

Rep dual(const Rep& m) { return Rep(m.q(), m.x().transpose(), m.y().transpose()); }

Rep direct_sum(const Rep& a, const Rep& b) {
  require_same_q(a, b);
  return Rep(a.q(), block_diagonal(a.x(), b.x()), block_diagonal(a.y(), b.y()));
}

RadicalSocle radical_socle(const Rep& m) {
  const GroupModule g = m.as_group_module();
  return {radical(g), socle(g)};
}

Rep heller(const Rep& m, int steps) {
  GroupModule g = m.as_group_module();
  if (steps == 0) g = split_free(g).complement;
  for (int i = 0; i < -steps; ++i) g = syzygy(g);
  for (int i = 0; i < steps; ++i) g = cosyzygy(g);
  return Rep::from_group_module(m.q(), g);
}

ProjectiveSplit split_projective(const Rep& m) {
  FreeSplit s = split_free(m.as_group_module());
  return {s.free_rank, Rep::from_group_module(m.q(), s.complement)};
}

std::size_t trivial_summands(const BitMatrix& g) {
  return g.rows() - 2 * rank(g + BitMatrix::identity(g.rows()));
}

bool is_free_involution(const BitMatrix& g) { return trivial_summands(g) == 0; }

bool is_relatively_projective(const Rep& m, SubgroupId s) {
  const Restriction r = restrict(m, s);
  std::vector<IntertwineConstraint> cons;
  for (const auto& g : r.gens) cons.push_back({g, g});
  const std::vector<BitMatrix> ends = solve_linear(cons);
  const std::vector<BitMatrix> mats = element_matrices(dihedral_table(m.q().value()),
                                                       std::vector<BitMatrix>{m.x(), m.y()});
  const GroupTable& table = dihedral_table(m.q().value());
  const std::vector<std::size_t> reps = right_transversal(s, m.q());
  const std::size_t n = m.dim();
  BitMatrix traces(ends.size(), n * n);
  for (std::size_t k = 0; k < ends.size(); ++k) {
    BitMatrix tr(n, n);
    for (std::size_t t : reps) tr += mats[table.inverse[t]] * ends[k] * mats[t];
    const auto flat = flatten(tr);
    for (std::size_t w = 0; w < flat.size(); ++w) traces.row(k)[w] = flat[w];
  }
  const Subspace span(traces);
  return span.contains(flatten(BitMatrix::identity(n)));
}

}  // namespace dihedral
