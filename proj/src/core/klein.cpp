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

#include "dihedral/klein.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "dihedral/error.hpp"

namespace dihedral {

std::size_t KleinSummand::dim() const {
  switch (kind) {
    case Kind::kOmega: return 2 * static_cast<std::size_t>(n < 0 ? -n : n) + 1;
    case Kind::kFree: return 4;
    case Kind::kPeriodic: return 2 * static_cast<std::size_t>(poly.degree()) * power;
    case Kind::kPeriodicInfinity: return 2 * power;
  }
  return 0;
}

std::string KleinSummand::to_string() const {
  switch (kind) {
    case Kind::kOmega: return "Omega(" + std::to_string(n) + ")";
    case Kind::kFree: return "Free";
    case Kind::kPeriodic: return "Periodic(" + poly.to_string() + "," + std::to_string(power) + ")";
    case Kind::kPeriodicInfinity: return "PeriodicInfinity(" + std::to_string(power) + ")";
  }
  return "?";
}

bool operator<(const KleinSummand& a, const KleinSummand& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.n != b.n) return a.n < b.n;
  if (a.power != b.power) return a.power < b.power;
  return a.poly < b.poly;
}

void KleinDecomposition::add(const KleinSummand& s, std::size_t mult) {
  if (mult != 0) terms_[s] += mult;
}

void KleinDecomposition::merge(const KleinDecomposition& other) {
  for (const auto& [s, m] : other.terms_) add(s, m);
}

std::size_t KleinDecomposition::dim() const {
  std::size_t d = 0;
  for (const auto& [s, m] : terms_) d += s.dim() * m;
  return d;
}

std::size_t KleinDecomposition::multiplicity(const KleinSummand& s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<int> KleinDecomposition::omega_indices() const {
  std::vector<int> out;
  for (const auto& [s, m] : terms_) {
    if (s.kind == KleinSummand::Kind::kOmega) out.insert(out.end(), m, s.n);
  }
  return out;
}

KleinDecomposition KleinDecomposition::negated() const {
  KleinDecomposition out;
  for (const auto& [s, m] : terms_) {
    KleinSummand t = s;
    if (t.kind == KleinSummand::Kind::kOmega) t.n = -t.n;
    out.add(t, m);
  }
  return out;
}

KleinDecomposition KleinDecomposition::shifted(int k) const {
  KleinDecomposition out;
  for (const auto& [s, m] : terms_) {
    if (s.kind == KleinSummand::Kind::kFree) continue;
    KleinSummand t = s;
    if (t.kind == KleinSummand::Kind::kOmega) t.n += k;
    out.add(t, m);
  }
  return out;
}

KleinDecomposition KleinDecomposition::without_free() const { return shifted(0); }

std::string KleinDecomposition::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, m] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << s.to_string();
    if (m > 1) out << "x" << m;
  }
  if (first) out << "0";
  return out.str();
}

KleinFreeSplit split_free(const KleinRep& m) {
  FreeSplit s = split_free(m.as_group_module());
  return {s.free_rank, KleinRep::from_group_module(s.complement)};
}

namespace {

// Dimension of { (x_0..x_k) : x_0 U = 0, x_i U + x_{i-1} V = 0, x_k V = 0 },
// i.e. left polynomial kernel vectors of U + tV of degree <= k.
std::size_t left_kernel_dim(const BitMatrix& u, const BitMatrix& v, std::size_t k) {
  const std::size_t a = u.rows();
  const std::size_t b = u.cols();
  BitMatrix big((k + 1) * a, (k + 2) * b);
  for (std::size_t i = 0; i <= k; ++i) {
    big.set_block(i * a, i * b, u);
    big.set_block(i * a, (i + 1) * b, v);
  }
  return big.rows() - rank(big);
}

// Multiplicities c_n of the left minimal indices n of U + tV.
std::map<std::size_t, std::size_t> left_minimal_indices(const BitMatrix& u, const BitMatrix& v,
                                                        std::size_t count) {
  std::map<std::size_t, std::size_t> out;
  if (count == 0) return out;
  long d1 = 0;  // d_{k-1}
  long d2 = 0;  // d_{k-2}
  for (std::size_t k = 0;; ++k) {
    const long d = static_cast<long>(left_kernel_dim(u, v, k));
    const long c = d - 2 * d1 + d2;
    if (c > 0) out[k] = static_cast<std::size_t>(c);
    if (d - d1 == static_cast<long>(count)) break;
    if (k > u.cols() + 1) throw Error(ErrorCode::kInternal, "minimal index computation did not settle");
    d2 = d1;
    d1 = d;
  }
  return out;
}

}  // namespace

KleinDecomposition pencil_reduce(const KleinRep& m) {
  const std::size_t n = m.dim();
  const BitMatrix id = BitMatrix::identity(n);
  const BitMatrix u = m.g1 + id;
  const BitMatrix v = m.g2 + id;
  if (!(u * v).is_zero()) {
    throw Error(ErrorCode::kPreconditionViolated, "pencil reduction needs (g1+1)(g2+1) = 0");
  }
  KleinDecomposition out;
  if (n == 0) return out;
  const Subspace rad(vstack(u, v));
  const std::vector<std::size_t> top = rad.complement_indices();
  const std::size_t a = top.size();
  const std::size_t b = rad.dim();
  const BitMatrix pu = rad.coordinates_of_rows(u.select_rows(top));
  const BitMatrix pv = rad.coordinates_of_rows(v.select_rows(top));

  std::size_t grank = 0;
  if (a > 0 && b > 0) {
    const std::vector<Poly2> finite = smith_invariant_factors(linear_pencil(pu, pv));
    grank = finite.size();
    for (const Poly2& d : finite) {
      if (d.degree() <= 0) continue;
      for (const auto& [f, e] : factor(d)) out.add(KleinSummand::periodic(f, e));
    }
    const std::vector<Poly2> swapped = smith_invariant_factors(linear_pencil(pv, pu));
    const Poly2 s = Poly2::monomial(1);
    for (const Poly2& d : swapped) {
      std::size_t e = 0;
      Poly2 rest = d;
      while (!rest.is_zero() && rest.degree() > 0 && (rest % s).is_zero()) {
        rest = rest / s;
        ++e;
      }
      if (e > 0) out.add(KleinSummand::periodic_infinity(e));
    }
  }
  for (const auto& [idx, c] : left_minimal_indices(pu, pv, a - grank)) {
    out.add(KleinSummand::omega(static_cast<int>(idx)), c);
  }
  for (const auto& [idx, c] : left_minimal_indices(pu.transpose(), pv.transpose(), b - grank)) {
    out.add(KleinSummand::omega(-static_cast<int>(idx)), c);
  }
  if (out.dim() != n) throw Error(ErrorCode::kInternal, "Klein decomposition dimension mismatch");
  return out;
}

KleinDecomposition klein_decompose(const KleinRep& m) {
  const KleinFreeSplit s = split_free(m);
  KleinDecomposition out = pencil_reduce(s.complement);
  out.add(KleinSummand::free(), s.free_rank);
  return out;
}

KleinRep klein_trivial() { return {BitMatrix::identity(1), BitMatrix::identity(1)}; }

KleinRep klein_regular() {
  const auto gens = regular_generators(klein_table());
  return {gens[0], gens[1]};
}

KleinRep klein_direct_sum(const KleinRep& a, const KleinRep& b) {
  return {block_diagonal(a.g1, b.g1), block_diagonal(a.g2, b.g2)};
}

KleinRep klein_tensor(const KleinRep& a, const KleinRep& b) {
  return {kronecker_product(a.g1, b.g1), kronecker_product(a.g2, b.g2)};
}

KleinRep klein_dual(const KleinRep& m) { return {m.g1.transpose(), m.g2.transpose()}; }

KleinRep klein_heller(const KleinRep& m, int steps) {
  GroupModule g = m.as_group_module();
  if (steps == 0) g = split_free(g).complement;
  for (int i = 0; i < -steps; ++i) g = syzygy(g);
  for (int i = 0; i < steps; ++i) g = cosyzygy(g);
  return KleinRep::from_group_module(g);
}

std::string Signature::to_string() const {
  return "[" + std::to_string(r) + "," + std::to_string(s) + "]";
}

KleinProfile klein_profile(const Rep& m) {
  return {klein_decompose(restrict_klein(m, SubgroupId::kKleinX)),
          klein_decompose(restrict_klein(m, SubgroupId::kKleinY))};
}

SignatureResult signature_of(const Rep& m) {
  const KleinProfile p = klein_profile(m);
  const std::vector<int> ox = p.on_x.omega_indices();
  const std::vector<int> oy = p.on_y.omega_indices();
  SignatureResult out;
  out.on_x = p.on_x;
  out.on_y = p.on_y;
  if (ox.size() == 2 && oy.empty()) {
    out.active = SubgroupId::kKleinX;
    out.signature = Signature::of(ox[0], ox[1]);
  } else if (oy.size() == 2 && ox.empty()) {
    out.active = SubgroupId::kKleinY;
    out.signature = Signature::of(oy[0], oy[1]);
  } else {
    throw Error(ErrorCode::kNotSignatureEligible,
                "restrictions have " + std::to_string(ox.size()) + " and " + std::to_string(oy.size()) +
                    " Omega summands on X and Y");
  }
  return out;
}

bool is_periodic(const Rep& m) {
  const KleinProfile p = klein_profile(m);
  return !p.on_x.has_omega() && !p.on_y.has_omega();
}

}  // namespace dihedral
