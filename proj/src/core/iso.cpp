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

#include "dihedral/iso.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "dihedral/error.hpp"

namespace dihedral {
namespace {

BitMatrix stable_power(const BitMatrix& phi) {
  BitMatrix p = phi;
  for (std::size_t k = 1; k < phi.rows(); k *= 2) p = p * p;
  return p;
}

BitMatrix random_combination(const std::vector<BitMatrix>& basis, std::mt19937_64& rng) {
  BitMatrix out(basis.front().rows(), basis.front().cols());
  for (const auto& b : basis) {
    if (rng() & 1U) out += b;
  }
  return out;
}

IsoVerdict search_hom(const Rep& m, const Rep& n, std::uint64_t seed) {
  const HomSpace h = hom_space(m, n);
  if (h.dim() == 0) return IsoVerdict::kNotIsomorphic;
  const std::size_t d = m.dim();
  if (h.dim() <= 16) {
    BitMatrix cur(d, d);
    for (std::uint32_t g = 1; g < (1U << h.dim()); ++g) {
      cur += h.basis[static_cast<std::size_t>(std::countr_zero(g))];
      if (rank(cur) == d) return IsoVerdict::kIsomorphic;
    }
    return IsoVerdict::kNotIsomorphic;
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 256; ++t) {
    if (rank(random_combination(h.basis, rng)) == d) return IsoVerdict::kIsomorphic;
  }
  if (hom_space(m, m).dim() != h.dim() || hom_space(n, m).dim() != h.dim()) {
    return IsoVerdict::kNotIsomorphic;
  }
  return IsoVerdict::kNotDecided;
}

// Parity of the functional chi on an End element, read from coordinates.
bool chi_of(const Subspace& algebra, const std::vector<bool>& chi, const BitMatrix& x) {
  const auto flat = flatten(x);
  bool v = false;
  for (std::size_t c : algebra.coordinates(flat)) v ^= chi[c];
  return v;
}

std::vector<BitMatrix> algebra_basis(const Subspace& s, std::size_t n) {
  std::vector<BitMatrix> out;
  for (std::size_t k = 0; k < s.dim(); ++k) out.push_back(unflatten(s.basis().row(k), n, n));
  return out;
}

// True iff every product of dim(K^n) elements of the span vanishes.
bool span_is_nilpotent(const std::vector<BitMatrix>& gens, std::size_t n) {
  Subspace w(BitMatrix::identity(n));
  while (w.dim() > 0) {
    BitMatrix next(0, n);
    for (const auto& g : gens) next = vstack(next, w.basis() * g);
    Subspace nw(next);
    if (nw.dim() >= w.dim()) return false;
    w = std::move(nw);
  }
  return true;
}

// chi = 1 on units, 0 on nilpotents; local with residue field GF(2) iff chi
// is multiplicative and its kernel is nilpotent.
bool chi_certificate(const Subspace& algebra, const std::vector<BitMatrix>& basis,
                     const std::vector<bool>& chi, std::size_t n) {
  if (!chi_of(algebra, chi, BitMatrix::identity(n))) return false;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t l = 0; l < basis.size(); ++l) {
      if (chi_of(algebra, chi, basis[k] * basis[l]) != (chi[k] && chi[l])) return false;
    }
  }
  std::vector<BitMatrix> ideal;
  std::optional<std::size_t> unit;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!chi[k]) {
      ideal.push_back(basis[k]);
    } else if (!unit) {
      unit = k;
    } else {
      ideal.push_back(basis[k] + basis[*unit]);
    }
  }
  return span_is_nilpotent(ideal, n);
}

// Integer matrix over Z / 2^bits.
using IntMatrix = std::vector<std::vector<std::uint32_t>>;

std::uint32_t trace_of_power(const BitMatrix& c, int squarings, std::uint32_t mask) {
  const std::size_t n = c.rows();
  IntMatrix a(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = c.get(i, j) ? 1U : 0U;
  }
  for (int s = 0; s < squarings; ++s) {
    IntMatrix b(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint32_t aik = a[i][k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) b[i][j] = (b[i][j] + aik * a[k][j]) & mask;
      }
    }
    a = std::move(b);
  }
  std::uint32_t tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr = (tr + a[i][i]) & mask;
  return tr;
}

// Radical of a matrix algebra over GF(2) by the iterated trace-form method
// for prime characteristic: I_i = { a in I_{i-1} : g_i(ab) = 0 for all b },
// g_i(c) = (Tr(c~^(2^i)) mod 2^(i+1)) / 2^i, stopping at i = floor(log2 n).
std::vector<BitMatrix> radical_of_algebra(const std::vector<BitMatrix>& basis, std::size_t n) {
  std::vector<BitMatrix> ideal = basis;
  const int l = std::bit_width(n) - 1;
  for (int i = 0; i <= l && !ideal.empty(); ++i) {
    const std::uint32_t mask = (std::uint32_t{1} << (i + 1)) - 1;
    BitMatrix form(ideal.size(), basis.size());
    for (std::size_t r = 0; r < ideal.size(); ++r) {
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const std::uint32_t tr = trace_of_power(ideal[r] * basis[k], i, mask);
        form.set(r, k, ((tr >> i) & 1U) != 0);
      }
    }
    const BitMatrix combos = left_kernel(form);
    std::vector<BitMatrix> next;
    for (std::size_t c = 0; c < combos.rows(); ++c) {
      BitMatrix e(n, n);
      for (std::size_t r = 0; r < ideal.size(); ++r) {
        if (combos.get(c, r)) e += ideal[r];
      }
      next.push_back(std::move(e));
    }
    ideal = std::move(next);
  }
  return ideal;
}

// A splitting endomorphism from an element whose minimal polynomial has two
// coprime factors, if a has one.
std::optional<BitMatrix> split_by_min_poly(const BitMatrix& a) {
  const std::size_t n = a.rows();
  const auto factors = factor(min_poly(a));
  if (factors.size() < 2) return std::nullopt;
  const BitMatrix e = stable_power(factors.front().first.evaluate(a));
  const std::size_t r = rank(e);
  if (r > 0 && r < n) return e;
  return std::nullopt;
}

std::pair<Rep, Rep> split_by(const Rep& m, const BitMatrix& phi) {
  const BitMatrix e = stable_power(phi);
  const GroupModule g = m.as_group_module();
  const Subspace ker(left_kernel(e));
  const Subspace im(e);
  return {Rep::from_group_module(m.q(), restrict_to_subspace(g, ker)),
          Rep::from_group_module(m.q(), restrict_to_subspace(g, im))};
}

}  // namespace

IsoInvariants iso_invariants(const Rep& m) {
  const BitMatrix id = BitMatrix::identity(m.dim());
  return {m.dim(), rank(m.x() + id), rank(m.y() + id), rank(m.z() + id), klein_profile(m)};
}

HomSpace hom_space(const Rep& m, const Rep& n) {
  if (!(m.q() == n.q())) throw Error(ErrorCode::kQMismatch, "modules belong to different dihedral groups");
  if (m.dim() == 0 || n.dim() == 0) return {};
  const std::vector<IntertwineConstraint> cons = {{m.x(), n.x()}, {m.y(), n.y()}};
  return {solve_linear(cons)};
}

const char* to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::kIsomorphic: return "isomorphic";
    case IsoVerdict::kNotIsomorphic: return "not_isomorphic";
    case IsoVerdict::kNotDecided: return "not_decided";
  }
  return "?";
}

IsoVerdict is_isomorphic(const Rep& m, const Rep& n, std::uint64_t seed) {
  if (!(m.q() == n.q())) throw Error(ErrorCode::kQMismatch, "modules belong to different dihedral groups");
  if (m.dim() != n.dim()) return IsoVerdict::kNotIsomorphic;
  if (m.dim() == 0 || m == n) return IsoVerdict::kIsomorphic;
  if (!(iso_invariants(m) == iso_invariants(n))) return IsoVerdict::kNotIsomorphic;
  return search_hom(m, n, seed);
}

LocalityResult certify_local(const Rep& m, std::uint64_t seed) {
  const std::size_t n = m.dim();
  if (n <= 1) return {Locality::kLocal, std::nullopt};
  const HomSpace end = hom_space(m, m);
  BitMatrix flat(end.dim(), n * n);
  for (std::size_t k = 0; k < end.dim(); ++k) {
    const auto f = flatten(end.basis[k]);
    std::copy(f.begin(), f.end(), flat.row(k).begin());
  }
  const Subspace algebra(flat);
  const std::vector<BitMatrix> basis = algebra_basis(algebra, n);
  if (basis.size() == 1) return {Locality::kLocal, std::nullopt};

  std::vector<bool> chi(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::size_t r = rank(stable_power(basis[k]));
    if (r > 0 && r < n) return {Locality::kNotLocal, basis[k]};
    chi[k] = r == n;
  }
  if (chi_certificate(algebra, basis, chi, n)) return {Locality::kLocal, std::nullopt};

  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t l = 0; l < basis.size(); ++l) {
      const BitMatrix p = basis[k] * basis[l];
      const std::size_t r = rank(stable_power(p));
      if (r > 0 && r < n) return {Locality::kNotLocal, p};
    }
  }
  for (int t = 0; t < 64; ++t) {
    const BitMatrix a = random_combination(basis, rng);
    const std::size_t r = rank(stable_power(a));
    if (r > 0 && r < n) return {Locality::kNotLocal, a};
    if (auto e = split_by_min_poly(a)) return {Locality::kNotLocal, *e};
  }

  const std::vector<BitMatrix> rad = radical_of_algebra(basis, n);
  const std::size_t e = basis.size() - rad.size();
  if (e == 1) return {Locality::kLocal, std::nullopt};
  // A/J is a field iff some element generates a subfield of degree e.
  for (int t = 0; t < 256; ++t) {
    const BitMatrix a = random_combination(basis, rng);
    const auto factors = factor(min_poly(a));
    if (factors.size() == 1 && static_cast<std::size_t>(factors.front().first.degree()) == e) {
      return {Locality::kLocal, std::nullopt};
    }
    if (auto s = split_by_min_poly(a)) return {Locality::kNotLocal, *s};
  }
  return {Locality::kUnknown, std::nullopt};
}

std::string IdTag::to_string() const {
  switch (kind) {
    case Kind::kStringWord: return "string(" + dihedral::to_string(*word) + ")";
    case Kind::kString: return "string";
    case Kind::kBand: return "band";
    case Kind::kProjective: return "projective";
    case Kind::kUnidentified: return "unidentified";
  }
  return "?";
}

IdTag identify_summand(const Rep& n, const IdentifyOptions& opts) {
  const std::size_t d = n.dim();
  const QParam q = n.q();
  if (d == static_cast<std::size_t>(q.group_order()) && split_projective(n).projective_rank == 1) {
    return {IdTag::Kind::kProjective, std::nullopt};
  }
  if (is_free_involution(n.x()) && is_free_involution(n.y())) return {IdTag::Kind::kBand, std::nullopt};
  if (d == 0 || d - 1 > opts.max_word_length) return {IdTag::Kind::kString, std::nullopt};

  const BitMatrix id = BitMatrix::identity(d);
  const std::size_t na = rank(n.x() + id);
  const std::size_t nb = rank(n.y() + id);
  std::optional<IsoInvariants> key;
  std::optional<Word> found;
  std::size_t examined = 0;
  for_each_word(q, d - 1, [&](const Word& w) {
    if (++examined > opts.budget) return false;
    if (!is_canonical(w) || w.count(Symbol::kA) != na || w.count(Symbol::kB) != nb) return true;
    const Rep cand = string_module(w, q);
    if (!key) key = iso_invariants(n);
    if (!(iso_invariants(cand) == *key)) return true;
    if (search_hom(cand, n, opts.seed) == IsoVerdict::kIsomorphic) {
      found = w;
      return false;
    }
    return true;
  });
  if (found) return {IdTag::Kind::kStringWord, found};
  return {IdTag::Kind::kString, std::nullopt};
}

bool DecompositionReport::all_certified() const {
  return std::all_of(summands.begin(), summands.end(), [](const auto& s) { return s.certified; });
}

std::size_t DecompositionReport::count(std::size_t summand_dim) const {
  std::size_t c = 0;
  for (const auto& s : summands) {
    if (s.module.dim() == summand_dim) c += s.multiplicity;
  }
  return c;
}

std::size_t DecompositionReport::total_summands() const {
  std::size_t c = 0;
  for (const auto& s : summands) c += s.multiplicity;
  return c;
}

std::vector<Piece> split_indecomposables(const Rep& m, std::uint64_t seed) {
  std::vector<Piece> out;
  const ProjectiveSplit ps = split_projective(m);
  for (std::size_t i = 0; i < ps.projective_rank; ++i) out.push_back({regular_module(m.q()), true});
  std::vector<Rep> work;
  if (ps.complement.dim() > 0) work.push_back(ps.complement);
  while (!work.empty()) {
    Rep cur = std::move(work.back());
    work.pop_back();
    const LocalityResult lr = certify_local(cur, seed);
    if (lr.verdict == Locality::kNotLocal && lr.splitter) {
      auto [a, b] = split_by(cur, *lr.splitter);
      work.push_back(std::move(a));
      work.push_back(std::move(b));
      continue;
    }
    out.push_back({std::move(cur), lr.verdict == Locality::kLocal});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Piece& a, const Piece& b) { return a.module.dim() < b.module.dim(); });
  return out;
}

DecompositionReport fitting_decompose(const Rep& m, const DecomposeOptions& opts) {
  DecompositionReport report;
  report.seed = opts.seed;
  report.dim = m.dim();
  std::vector<IsoInvariants> keys;
  for (Piece& p : split_indecomposables(m, opts.seed)) {
    const IsoInvariants key = iso_invariants(p.module);
    bool merged = false;
    for (std::size_t g = 0; g < report.summands.size() && !merged; ++g) {
      auto& s = report.summands[g];
      if (!(keys[g] == key) || s.certified != p.certified) continue;
      if (s.module == p.module || search_hom(s.module, p.module, opts.seed) == IsoVerdict::kIsomorphic) {
        ++s.multiplicity;
        merged = true;
      }
    }
    if (merged) continue;
    keys.push_back(key);
    report.summands.push_back({std::move(p.module), 1, {}, p.certified});
  }
  for (auto& s : report.summands) {
    if (!s.certified) {
      s.tag = {IdTag::Kind::kUnidentified, std::nullopt};
    } else {
      IdentifyOptions io = opts.identify_options;
      if (!opts.identify) io.max_word_length = 0;
      s.tag = identify_summand(s.module, io);
    }
  }
  return report;
}

std::optional<std::size_t> IsoRegistry::find(const Rep& m, const IsoInvariants& key) const {
  for (std::size_t k = 0; k < modules_.size(); ++k) {
    if (!(keys_[k] == key)) continue;
    if (modules_[k] == m || search_hom(modules_[k], m, seed_) == IsoVerdict::kIsomorphic) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> IsoRegistry::find(const Rep& m) const { return find(m, iso_invariants(m)); }

std::pair<std::size_t, bool> IsoRegistry::insert(const Rep& m) {
  IsoInvariants key = iso_invariants(m);
  if (auto k = find(m, key)) return {*k, false};
  modules_.push_back(m);
  keys_.push_back(std::move(key));
  return {modules_.size() - 1, true};
}

Rep reassemble(const DecompositionReport& r, QParam q) {
  Rep out(q, BitMatrix(0, 0), BitMatrix(0, 0));
  for (const auto& s : r.summands) {
    for (std::size_t i = 0; i < s.multiplicity; ++i) out = direct_sum(out, s.module);
  }
  return out;
}

}  // namespace dihedral
