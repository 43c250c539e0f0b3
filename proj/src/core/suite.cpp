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

#include "dihedral/suite.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "dihedral/algebraic.hpp"
#include "dihedral/error.hpp"
#include "dihedral/iso.hpp"
#include "dihedral/klein.hpp"
#include "dihedral/modules.hpp"
#include "dihedral/parallel.hpp"
#include "dihedral/quiver.hpp"

namespace dihedral {
namespace {

using Status = CaseOutcome::Status;

CaseOutcome tallied(CaseOutcome c, std::initializer_list<std::string> keys) {
  for (const auto& k : keys) ++c.tallies[k];
  return c;
}

bool starts_a(const Word& w) { return !w.empty() && w.front().symbol == Symbol::kA; }

bool undefined_operator(const Error& e) {
  return e.code() == ErrorCode::kOperatorUndefined || e.code() == ErrorCode::kAmbiguousOperator;
}

std::vector<Json> word_cases(QParam q, std::size_t min_len, std::size_t max_len, bool canonical_only,
                             const std::function<bool(const Word&)>& keep = {}) {
  std::vector<Json> out;
  for (const Word& w : enumerate_words(q, min_len, max_len, canonical_only)) {
    if (!keep || keep(w)) out.push_back({{"word", to_string(w)}});
  }
  return out;
}

Word payload_word(const Json& p, const char* key = "word") { return parse_word(p.at(key).get<std::string>()); }

BitMatrix companion(const Poly2& f) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  BitMatrix m(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) m.set(i + 1, i);
  for (std::size_t i = 0; i < d; ++i) m.set(i, d - 1, f.coeff(i));
  return m;
}

BitMatrix nilpotent_jordan(std::size_t m) {
  BitMatrix j(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) j.set(i, i + 1);
  return j;
}

// g1 = 1 + [[0,u],[0,0]], g2 = 1 + [[0,v],[0,0]] on top (+) radical.
KleinRep pencil_block(const BitMatrix& u, const BitMatrix& v) {
  const std::size_t a = u.rows();
  const std::size_t n = a + u.cols();
  BitMatrix g1 = BitMatrix::identity(n);
  BitMatrix g2 = BitMatrix::identity(n);
  g1.set_block(0, a, u);
  g2.set_block(0, a, v);
  return {g1, g2};
}

KleinRep summand_block(const KleinSummand& s) {
  switch (s.kind) {
    case KleinSummand::Kind::kFree: return klein_regular();
    case KleinSummand::Kind::kOmega: {
      if (s.n == 0) return klein_trivial();
      const std::size_t n = static_cast<std::size_t>(std::abs(s.n));
      BitMatrix u(n + 1, n);
      BitMatrix v(n + 1, n);
      for (std::size_t i = 0; i < n; ++i) {
        u.set(i, i);
        v.set(i + 1, i);
      }
      return s.n > 0 ? pencil_block(u, v) : pencil_block(u.transpose(), v.transpose());
    }
    case KleinSummand::Kind::kPeriodic: {
      Poly2 p = Poly2::constant(true);
      for (std::size_t i = 0; i < s.power; ++i) p = p * s.poly;
      const BitMatrix c = companion(p);
      return pencil_block(c, BitMatrix::identity(c.rows()));
    }
    case KleinSummand::Kind::kPeriodicInfinity:
      return pencil_block(BitMatrix::identity(s.power), nilpotent_jordan(s.power));
  }
  return klein_trivial();
}

BitMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    BitMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, (rng() & 1) != 0);
    }
    if (is_invertible(m)) return m;
  }
}

std::vector<Json> band_cases(QParam q, std::size_t count) {
  std::vector<Word> words;
  for (const Word& w : enumerate_words(q, 2, 6, false)) {
    if (w.length() % 2 != 0 || !starts_a(w)) continue;
    try {
      band_module(w, BitMatrix::identity(1), q);
      words.push_back(w);
    } catch (const Error&) {
      continue;
    }
    if (words.size() == 4) break;
  }
  const std::vector<BitMatrix> phis = {BitMatrix::identity(1), companion(Poly2::parse("1+t+t^2")),
                                       BitMatrix::from_strings({"11", "01"}, 2),
                                       companion(Poly2::parse("1+t+t^3"))};
  std::vector<Json> out;
  for (const auto& phi : phis) {
    for (const auto& w : words) {
      if (out.size() == count) return out;
      out.push_back({{"band", to_string(w)}, {"phi", matrix_to_json(phi)}});
    }
  }
  return out;
}

std::string describe(const KleinDecomposition& d) { return d.to_string(); }

std::size_t count_k(const DecompositionReport& r) { return r.count(1); }

// Indecomposable kinds as counted by the lemmas: string modules with
// multiplicity, split by parity of dimension.
struct StringCount {
  std::size_t all = 0;
  std::size_t even = 0;
  std::size_t unidentified = 0;
};
StringCount count_strings(const DecompositionReport& r) {
  StringCount c;
  for (const auto& s : r.summands) {
    if (s.tag.kind == IdTag::Kind::kUnidentified) c.unidentified += s.multiplicity;
    if (!s.tag.is_string()) continue;
    c.all += s.multiplicity;
    if (s.module.dim() % 2 == 0) c.even += s.multiplicity;
  }
  return c;
}

// Odd-dimensional summands must be string modules of even-length words.
std::optional<std::string> odd_summands_are_strings(const DecompositionReport& r) {
  for (const auto& s : r.summands) {
    if (s.module.dim() % 2 == 0) continue;
    if (!s.tag.is_string()) return "odd-dimensional summand tagged " + s.tag.to_string();
    if (s.tag.word && s.tag.word->length() % 2 != 0) return "odd-dimensional summand " + s.tag.to_string();
  }
  return std::nullopt;
}

DecompositionReport decompose_kinds(const Rep& m, std::uint64_t seed) {
  DecomposeOptions o;
  o.seed = seed;
  o.identify_options.seed = seed;
  o.identify_options.max_word_length = 8;
  return fitting_decompose(m, o);
}

Rep omega_ky_induced(QParam q) { return induce(klein_heller(klein_trivial(), -1), SubgroupId::kKleinY, q); }

SweepReport sweep_for(const Json& p, const SuiteConfig& cfg) {
  SweepOptions o;
  o.radius = cfg.radius;
  o.jobs = 1;
  o.seed = cfg.seed;
  return sweep_component(payload_word(p, "seed_word"), QParam(cfg.q), o);
}

std::vector<Json> seed_cases(const SuiteConfig& cfg) {
  std::vector<Json> out;
  for (const Word& w : cfg.seeds) out.push_back({{"seed_word", to_string(w)}});
  return out;
}

std::multiset<int> merge(const Signature& a, const Signature& b) { return {a.r, a.s, b.r, b.s}; }

// ---------------------------------------------------------------- suites

std::vector<Json> omega2_cases(const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  std::vector<Json> out = word_cases(q, 0, cfg.max_length, false);
  for (Json& j : out) j["kind"] = "word";
  for (const Word& s : cfg.seeds) {
    for (int i = -cfg.radius; i <= cfg.radius; ++i) {
      for (int j = -cfg.radius; j <= cfg.radius; ++j) {
        out.push_back({{"kind", "grid"}, {"seed_word", to_string(s)}, {"i", i}, {"j", j}});
      }
    }
  }
  return out;
}

CaseOutcome omega2_check(const Json& p, const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  if (p.at("kind") == "grid") {
    const Word s = payload_word(p, "seed_word");
    const Coordinate c{p.at("i").get<int>(), p.at("j").get<int>()};
    const auto word = coordinate_word(s, c, q);
    const auto prev = coordinate_word(s, {c.i - 1, c.j - 1}, q);
    if (!word || !prev) return tallied(CaseOutcome::skip("no word path"), {"grid_undefined"});
    const IsoVerdict v = is_isomorphic(string_module(*word, q), heller(string_module(*prev, q), -2), cfg.seed);
    if (v != IsoVerdict::kIsomorphic) {
      return CaseOutcome::fail("vertex " + c.to_string() + " vs Omega^2 of its translate: " + to_string(v));
    }
    return tallied(CaseOutcome::pass(), {"grid_checked"});
  }
  const Word w = payload_word(p);
  CaseOutcome out;
  Word lr;
  try {
    lr = omega2_word(w, q);
  } catch (const Error& e) {
    if (!undefined_operator(e)) throw;
    return tallied(CaseOutcome::skip(e.what()), {"undefined"});
  }
  try {
    const Word rl = apply_l(apply_r(w, q), q);
    if (!(rl == lr)) return CaseOutcome::fail("L and R do not commute: " + to_string(lr) + " vs " + to_string(rl));
    ++out.tallies["commute_checked"];
  } catch (const Error& e) {
    if (!undefined_operator(e)) throw;
  }
  try {
    const ArNeighbors n = ar_neighbors(w, q);
    const std::size_t order = static_cast<std::size_t>(q.group_order());
    const std::size_t lhs = n.left.length() + n.right.length() + 2 + (n.has_projective_middle ? order : 0);
    const std::size_t rhs = w.length() + n.translate.length() + 2;
    if (lhs != rhs) return CaseOutcome::fail("almost split sequence dimensions do not add up");
    ++out.tallies["sequence_checked"];
  } catch (const Error& e) {
    if (!undefined_operator(e)) throw;
  }
  const IsoVerdict v = is_isomorphic(string_module(lr, q), heller(string_module(w, q), -2), cfg.seed);
  if (v != IsoVerdict::kIsomorphic) {
    return CaseOutcome::fail("M(" + to_string(lr) + ") vs Omega^2 M(w): " + to_string(v));
  }
  ++out.tallies["checked"];
  return out;
}

std::vector<Json> restriction_cases(const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  std::vector<Json> out = word_cases(q, 0, cfg.max_length, false);
  for (Json& b : band_cases(q, cfg.samples)) out.push_back(std::move(b));
  return out;
}

CaseOutcome restriction_check(const Json& p, const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  if (p.contains("band")) {
    const Rep m = band_module(payload_word(p, "band"), matrix_from_json(p.at("phi")), q);
    if (!is_free_involution(m.x()) || !is_free_involution(m.y())) {
      return CaseOutcome::fail("band module restriction is not free");
    }
    return tallied(CaseOutcome::pass(), {"bands"});
  }
  const Word w = payload_word(p);
  const Rep m = string_module(w, q);
  const std::size_t tx = trivial_summands(m.x());
  const std::size_t ty = trivial_summands(m.y());
  if (m.dim() % 2 == 1) {
    if (tx != 1 || ty != 1) {
      return CaseOutcome::fail("odd-dimensional: trivial summands " + std::to_string(tx) + ", " + std::to_string(ty));
    }
    return tallied(CaseOutcome::pass(), {"odd_dim"});
  }
  const bool a = starts_a(w);
  const std::size_t free_side = a ? tx : ty;
  const std::size_t two_side = a ? ty : tx;
  if (free_side != 0 || two_side != 2) {
    return CaseOutcome::fail("even-dimensional: trivial summands on <x> " + std::to_string(tx) + ", on <y> " +
                             std::to_string(ty));
  }
  return tallied(CaseOutcome::pass(), {"even_dim"});
}

std::vector<Json> strings_cases(const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  std::vector<Json> out = word_cases(q, 0, cfg.max_length, false);
  for (Json& j : out) j["kind"] = "single";
  const std::size_t pair_len = std::min<std::size_t>(cfg.max_length, 5);
  for (std::size_t len = 0; len <= pair_len; ++len) {
    const std::vector<Word> ws = enumerate_words(q, len, len, true);
    for (std::size_t i = 0; i < ws.size(); ++i) {
      for (std::size_t j = i + 1; j < ws.size(); ++j) {
        out.push_back({{"kind", "pair"}, {"word", to_string(ws[i])}, {"other", to_string(ws[j])}});
      }
    }
  }
  return out;
}

CaseOutcome strings_check(const Json& p, const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  const Word w = payload_word(p);
  const Rep m = string_module(w, q);
  if (p.at("kind") == "pair") {
    const IsoVerdict v = is_isomorphic(m, string_module(payload_word(p, "other"), q), cfg.seed);
    if (v != IsoVerdict::kNotIsomorphic) return CaseOutcome::fail("distinct canonical words: " + std::string(to_string(v)));
    return tallied(CaseOutcome::pass(), {"pairs"});
  }
  const IsoVerdict v = is_isomorphic(m, string_module(invert_word(w), q), cfg.seed);
  if (v != IsoVerdict::kIsomorphic) return CaseOutcome::fail("M(w) vs M(w^-1): " + std::string(to_string(v)));
  if (certify_local(m, cfg.seed).verdict != Locality::kLocal) {
    return CaseOutcome::fail("endomorphism ring not certified local");
  }
  return tallied(CaseOutcome::pass(), {"single"});
}

std::vector<Json> pair_cases(const std::vector<Word>& ws) {
  std::vector<Json> out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i; j < ws.size(); ++j) {
      out.push_back({{"word", to_string(ws[i])}, {"other", to_string(ws[j])}});
    }
  }
  return out;
}

std::vector<Json> even_tensor_cases(const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  std::vector<Word> ws;
  for (const Word& w : enumerate_words(q, 1, cfg.max_length, true)) {
    if (w.length() % 2 == 1) ws.push_back(w);
  }
  return pair_cases(ws);
}

CaseOutcome even_tensor_check(const Json& p, const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  const Word w = payload_word(p);
  const Word v = payload_word(p, "other");
  const DecompositionReport r = decompose_kinds(tensor(string_module(w, q), string_module(v, q)), cfg.seed);
  const StringCount c = count_strings(r);
  if (c.unidentified > 0) return CaseOutcome::fail(std::to_string(c.unidentified) + " summands not certified");
  if (auto why = odd_summands_are_strings(r)) return CaseOutcome::fail(*why);
  if (starts_a(w) != starts_a(v)) {
    if (c.all != 0) return CaseOutcome::fail("opposite types: " + std::to_string(c.all) + " string summands");
    return tallied(CaseOutcome::pass(), {"opposite"});
  }
  if (c.even != 2) return CaseOutcome::fail("same type: " + std::to_string(c.even) + " even-dimensional string summands");
  return tallied(CaseOutcome::pass(), {"same"});
}

std::vector<Json> benson_carlson_cases(const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  return pair_cases(enumerate_words(q, 0, cfg.max_length, true));
}

CaseOutcome benson_carlson_check(const Json& p, const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  const Rep m = string_module(payload_word(p), q);
  const Rep n = string_module(payload_word(p, "other"), q);
  const DecompositionReport r = decompose_kinds(tensor(m, n), cfg.seed);
  if (!r.all_certified()) return CaseOutcome::fail("summands not certified");
  if (auto why = odd_summands_are_strings(r)) return CaseOutcome::fail(*why);
  const std::size_t k = count_k(r);
  const bool dual_pair = m.dim() % 2 == 1 && n.dim() == m.dim() && isomorphic(m, dual(n), cfg.seed);
  if (dual_pair ? k != 1 : k != 0) {
    return CaseOutcome::fail("K appears " + std::to_string(k) + " times, expected " + (dual_pair ? "1" : "0"));
  }
  if (m.dim() % 2 == 0 || n.dim() % 2 == 0) {
    for (const auto& s : r.summands) {
      if (s.module.dim() % 2 != 0) return CaseOutcome::fail("odd-dimensional summand in an even product");
    }
    return tallied(CaseOutcome::pass(), {"even"});
  }
  return tallied(CaseOutcome::pass(), {dual_pair ? "dual_pair" : "odd"});
}

std::vector<Json> fixed_point_cases(const SuiteConfig& cfg) {
  std::vector<Json> out;
  for (std::size_t n = 0; n <= cfg.max_length; ++n) out.push_back({{"n", n}});
  return out;
}

CaseOutcome fixed_point_check(const Json& p, const SuiteConfig&) {
  const int n = p.at("n").get<int>();
  const KleinRep m = klein_heller(klein_trivial(), n);
  const KleinDecomposition d = klein_decompose(m);
  KleinDecomposition expected;
  expected.add(KleinSummand::omega(-n));
  if (!(d == expected)) return CaseOutcome::fail("built module decomposes as " + describe(d));
  const Subspace f1 = fixed_points(m.g1);
  const Subspace f2 = fixed_points(m.g2);
  const Subspace f3 = fixed_points(m.g1 * m.g2);
  const Subspace joint = f1.intersect(f2);
  const std::size_t want = static_cast<std::size_t>(n) + 1;
  if (joint.dim() != want) return CaseOutcome::fail("socle has dimension " + std::to_string(joint.dim()));
  for (const Subspace* s : {&f1, &f2, &f3}) {
    if (s->dim() != want) return CaseOutcome::fail("an involution has " + std::to_string(s->dim()) + " fixed points");
  }
  return CaseOutcome::pass();
}

std::vector<Json> signature_zero_cases(const SuiteConfig& cfg) {
  return word_cases(QParam(cfg.q), 1, cfg.max_length, false, [](const Word& w) { return w.length() % 2 == 1; });
}

CaseOutcome signature_zero_check(const Json& p, const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  const Word w = payload_word(p);
  const bool stated = w.front() == kLetterAInv || w.back() == kLetterA;
  const bool dual_form = w.front() == kLetterA || w.back() == kLetterAInv;
  if (!stated && !dual_form) return tallied(CaseOutcome::skip("neither form applies"), {"not_applicable"});
  SignatureResult s;
  try {
    s = signature_of(string_module(w, q));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotSignatureEligible) throw;
    return tallied(CaseOutcome::skip("periodic"), {"periodic"});
  }
  const Signature g = s.signature;
  const bool has_zero = g.r == 0 || g.s == 0;
  CaseOutcome out;
  if (stated && g.r <= 0 && g.s <= 0) {
    if (!has_zero) return CaseOutcome::fail("stated form: signature " + g.to_string());
    ++out.tallies["stated_applicable"];
  }
  if (dual_form && g.r >= 0 && g.s >= 0) {
    if (!has_zero) return CaseOutcome::fail("dual form: signature " + g.to_string());
    ++out.tallies["dual_applicable"];
  }
  return out;
}

CaseOutcome diamond_check(const Json& p, const SuiteConfig& cfg) {
  const SweepReport r = sweep_for(p, cfg);
  CaseOutcome out;
  out.tallies["holds"] = r.count(DiamondReport::Status::kHolds);
  out.tallies["skipped"] = r.count(DiamondReport::Status::kSkipped);
  out.tallies["unavailable"] = r.count(DiamondReport::Status::kUnavailable);
  out.tallies["fails"] = r.count(DiamondReport::Status::kFails);
  out.tallies["omega2_checked"] = r.omega2_checked;
  out.tallies["omega2_failed"] = r.omega2_failed;
  if (r.count(DiamondReport::Status::kFails) > 0) {
    std::string at;
    for (const auto& d : r.diamonds) {
      if (d.status == DiamondReport::Status::kFails) at += " " + d.end.to_string();
    }
    out.status = Status::kFail;
    out.detail = "diamond rule fails at" + at;
  } else if (r.omega2_failed > 0) {
    out.status = Status::kFail;
    out.detail = std::to_string(r.omega2_failed) + " vertices disagree with Omega^2 of their translate";
  }
  return out;
}

std::string grid_text(const SweepReport& r) {
  std::string s;
  for (const auto& v : r.vertices) {
    s += " " + v.at.to_string() + (v.available ? v.signature.to_string() : "?");
  }
  return s;
}

CaseOutcome trichotomy_check(const Json& p, const SuiteConfig& cfg) {
  const SweepReport r = sweep_for(p, cfg);
  if (!r.base_signature) return CaseOutcome::fail("seed vertex unavailable");
  if (r.pattern != Pattern::kDiagonalBoth || !r.diagonal_ok) {
    return CaseOutcome::fail(std::string("pattern ") + to_string(r.pattern) +
                             (r.diagonal_ok ? "" : ", diagonal off") + ";" + grid_text(r));
  }
  return tallied(CaseOutcome::pass(), {"pattern_i"});
}

CaseOutcome uniqueness_check(const Json& p, const SuiteConfig& cfg) {
  const SweepReport r = sweep_for(p, cfg);
  CaseOutcome out;
  out.tallies["zero_signatures"] = r.zero_signatures;
  if (r.zero_signatures > 1) {
    out.status = Status::kFail;
    out.detail = std::to_string(r.zero_signatures) + " vertices with signature [0,0]";
  }
  return out;
}

CaseOutcome duality_check(const Json& p, const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  const Word s = payload_word(p, "seed_word");
  const Rep up = dual(coordinate_module(s, {0, 1}, q).module);
  const Rep down = coordinate_module(s, {0, -1}, q).module;
  const IsoVerdict v = is_isomorphic(up, down, cfg.seed);
  if (v != IsoVerdict::kIsomorphic) {
    const bool reflected = isomorphic(up, coordinate_module(s, {-1, 0}, q).module, cfg.seed);
    return CaseOutcome::fail(std::string("M(0,1)* vs M(0,-1): ") + to_string(v) +
                             (reflected ? "; M(0,1)* is isomorphic to M(-1,0)" : ""));
  }
  return CaseOutcome::pass();
}

std::vector<Json> reflection_cases(const SuiteConfig& cfg) {
  std::vector<Json> out;
  for (const Word& s : cfg.seeds) {
    for (int i = -cfg.radius; i <= cfg.radius; ++i) {
      for (int j = -cfg.radius; j <= cfg.radius; ++j) {
        out.push_back({{"seed_word", to_string(s)}, {"i", i}, {"j", j}});
      }
    }
  }
  return out;
}

CaseOutcome reflection_check(const Json& p, const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  const Word s = payload_word(p, "seed_word");
  const Coordinate c{p.at("i").get<int>(), p.at("j").get<int>()};
  const IsoVerdict v = is_isomorphic(dual(coordinate_module(s, c, q).module),
                                     coordinate_module(s, {-c.j, -c.i}, q).module, cfg.seed);
  if (v != IsoVerdict::kIsomorphic) return CaseOutcome::fail(c.to_string() + "*: " + to_string(v));
  return CaseOutcome::pass();
}

std::vector<Json> klein_cases(const SuiteConfig& cfg) {
  std::vector<Json> out = {{{"kind", "orientation"}}, {{"kind", "patterns"}}};
  for (std::size_t k = 0; k < cfg.samples; ++k) out.push_back({{"kind", "random"}, {"index", k}});
  for (const Word& w : enumerate_words(QParam(cfg.q), 0, cfg.max_length, false)) {
    for (const char* s : {"X", "Y"}) out.push_back({{"kind", "shift"}, {"word", to_string(w)}, {"subgroup", s}});
  }
  return out;
}

CaseOutcome klein_orientation() {
  struct Want {
    int steps;
    std::size_t top, socle;
  };
  for (const Want& w : {Want{-1, 2, 1}, Want{1, 1, 2}, Want{-2, 3, 2}, Want{2, 2, 3}}) {
    const KleinRep m = klein_heller(klein_trivial(), w.steps);
    const GroupModule g = m.as_group_module();
    const std::size_t top = m.dim() - radical(g).dim();
    const std::size_t soc = socle(g).dim();
    const std::string label = "Omega^" + std::to_string(-w.steps) + "K";
    if (top != w.top || soc != w.socle) return CaseOutcome::fail(label + " has top " + std::to_string(top) + ", socle " + std::to_string(soc));
    KleinDecomposition expected;
    expected.add(KleinSummand::omega(-w.steps));
    const KleinDecomposition d = klein_decompose(m);
    if (!(d == expected)) return CaseOutcome::fail(label + " decomposes as " + describe(d));
  }
  const KleinRep o = klein_heller(klein_trivial(), -1);
  KleinDecomposition expected;
  expected.add(KleinSummand::omega(2));
  expected.add(KleinSummand::free());
  const KleinDecomposition d = klein_decompose(klein_tensor(o, o));
  if (!(d == expected)) return CaseOutcome::fail("Omega K (x) Omega K decomposes as " + describe(d));
  return CaseOutcome::pass();
}

CaseOutcome klein_patterns() {
  const std::vector<Signature> bases = {{0, 0}, {1, 1}, {0, 2}, {-1, 3}};
  const std::vector<Pattern> patterns = {Pattern::kDiagonalBoth, Pattern::kDiagonalI, Pattern::kDiagonalJ};
  for (const Signature& b : bases) {
    for (Pattern p : patterns) {
      std::map<Coordinate, Signature> grid;
      for (int i = -3; i <= 3; ++i) {
        for (int j = -3; j <= 3; ++j) {
          const int u = p == Pattern::kDiagonalJ ? j : i;
          const int v = p == Pattern::kDiagonalI ? i : j;
          grid[{i, j}] = Signature::of(b.r + 2 * u, b.s + 2 * v);
        }
      }
      for (int i = -3; i < 3; ++i) {
        for (int j = -3; j < 3; ++j) {
          if (merge(grid[{i, j}], grid[{i + 1, j + 1}]) != merge(grid[{i, j + 1}], grid[{i + 1, j}])) {
            return CaseOutcome::fail(std::string("pattern ") + to_string(p) + " breaks the diamond rule");
          }
        }
      }
      if (classify_pattern(grid, b) != p) return CaseOutcome::fail(std::string("pattern ") + to_string(p) + " misclassified");
    }
  }
  return CaseOutcome::pass();
}

const std::vector<Poly2>& small_irreducibles() {
  static const std::vector<Poly2> polys = {Poly2::parse("t"), Poly2::parse("1+t"), Poly2::parse("1+t+t^2"),
                                           Poly2::parse("1+t+t^3"), Poly2::parse("1+t^2+t^3")};
  return polys;
}

CaseOutcome klein_random(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), 0x6b6cu};
  std::mt19937_64 rng(seq);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const std::size_t target = 1 + pick(12);
  KleinDecomposition expected;
  KleinRep m{BitMatrix(0, 0), BitMatrix(0, 0)};
  for (std::size_t guard = 0; m.dim() < target && guard < 64; ++guard) {
    const std::size_t room = target - m.dim();
    KleinSummand s;
    switch (pick(4)) {
      case 0: {
        const int n = static_cast<int>(pick(room / 2 + 1));
        s = KleinSummand::omega(pick(2) == 0 ? n : -n);
        break;
      }
      case 1: s = KleinSummand::free(); break;
      case 2: {
        const Poly2& f = small_irreducibles()[pick(small_irreducibles().size())];
        s = KleinSummand::periodic(f, 1 + pick(3));
        break;
      }
      default: s = KleinSummand::periodic_infinity(1 + pick(3)); break;
    }
    if (s.dim() > room) continue;
    m = m.dim() == 0 ? summand_block(s) : klein_direct_sum(m, summand_block(s));
    expected.add(s);
  }
  const BitMatrix pm = random_invertible(m.dim(), rng);
  const BitMatrix pinv = inverse(pm);
  const KleinRep c{pm * m.g1 * pinv, pm * m.g2 * pinv};
  const KleinDecomposition d = klein_decompose(c);
  if (!(d == expected)) return CaseOutcome::fail("built " + describe(expected) + ", decomposed " + describe(d));
  if (d.dim() != c.dim()) return CaseOutcome::fail("dimension ledger");
  const KleinDecomposition dd = klein_decompose(klein_dual(c));
  if (!(dd == d.negated())) return CaseOutcome::fail("dual decomposes as " + describe(dd));
  return tallied(CaseOutcome::pass(), {"random"});
}

CaseOutcome klein_shift(const Json& p, const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  const SubgroupId s = parse_subgroup(p.at("subgroup").get<std::string>());
  const KleinRep m = restrict_klein(string_module(payload_word(p), q), s);
  const KleinDecomposition d = klein_decompose(m);
  if (d.dim() != m.dim()) return CaseOutcome::fail("dimension ledger");
  const KleinDecomposition down = klein_decompose(klein_heller(m, -1));
  if (!(down == d.shifted(1))) return CaseOutcome::fail("Omega: " + describe(d) + " -> " + describe(down));
  const KleinDecomposition up = klein_decompose(klein_heller(m, 1));
  if (!(up == d.shifted(-1))) return CaseOutcome::fail("Omega^-1: " + describe(d) + " -> " + describe(up));
  const KleinDecomposition dd = klein_decompose(klein_dual(m));
  if (!(dd == d.negated())) return CaseOutcome::fail("dual: " + describe(d) + " -> " + describe(dd));
  return tallied(CaseOutcome::pass(), {"shift"});
}

CaseOutcome klein_check(const Json& p, const SuiteConfig& cfg) {
  const std::string kind = p.at("kind").get<std::string>();
  if (kind == "orientation") return klein_orientation();
  if (kind == "patterns") return klein_patterns();
  if (kind == "random") return klein_random(cfg.seed, p.at("index").get<std::size_t>());
  return klein_shift(p, cfg);
}

std::vector<Json> algebraic_cases(const SuiteConfig&) {
  return {{{"probe", "trivial"}}, {{"probe", "induced_trivial"}}, {{"probe", "order"}}, {{"probe", "induced_omega"}}};
}

CaseOutcome algebraic_check(const Json& p, const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  const std::string kind = p.at("probe").get<std::string>();
  ProbeOptions o;
  o.seed = cfg.seed;
  o.jobs = 1;
  const Rep ky = induce(klein_trivial(), SubgroupId::kKleinY, q);
  if (kind == "trivial" || kind == "induced_trivial") {
    const ProbeReport r = tensor_closure_probe(kind == "trivial" ? trivial_module(q) : ky, o);
    if (r.verdict != ProbeVerdict::kClosed) return CaseOutcome::fail(std::string("verdict ") + to_string(r.verdict) + ": " + r.reason);
    if (r.verified && !*r.verified) return CaseOutcome::fail("closed set fails the verification pass");
    CaseOutcome out;
    out.tallies[kind + "_classes"] = r.classes.size();
    return out;
  }
  if (kind == "order") {
    const ProbeReport fwd = tensor_closure_probe(ky, o);
    o.reverse_order = true;
    const ProbeReport rev = tensor_closure_probe(ky, o);
    if (fwd.verdict != rev.verdict) return CaseOutcome::fail("verdict depends on processing order");
    IsoRegistry reg(cfg.seed);
    for (const auto& c : fwd.classes) reg.insert(c.module);
    for (const auto& c : rev.classes) {
      if (!reg.find(c.module)) return CaseOutcome::fail("reverse order found an extra class");
    }
    if (reg.size() != rev.classes.size()) return CaseOutcome::fail("reverse order missed a class");
    return CaseOutcome::pass();
  }
  const ProbeReport r = tensor_closure_probe(omega_ky_induced(q), o);
  CaseOutcome out;
  out.tallies["induced_omega_classes"] = r.classes.size();
  out.tallies["induced_omega_rounds"] = r.rounds;
  if (r.verdict != ProbeVerdict::kBudgetExceeded) {
    return CaseOutcome::fail(std::string("verdict ") + to_string(r.verdict) + ": " + r.reason);
  }
  std::size_t growing = 0;
  for (const auto& t : r.trace) growing += t.max_signature ? 1 : 0;
  if (!r.signatures_grow() || growing < 3) {
    out.status = Status::kFail;
    out.detail = "signature trace does not grow over 3 rounds";
  }
  return out;
}

std::vector<Json> vertex_y_cases(const SuiteConfig&) { return {{{"seed", "induced_omega"}}}; }

CaseOutcome vertex_y_check(const Json&, const SuiteConfig& cfg) {
  const QParam q(cfg.q);
  const Rep m = omega_ky_induced(q);
  const IdTag tag = identify_summand(m, {100000, 16, cfg.seed});
  if (!tag.word) return CaseOutcome::fail("seed module " + tag.to_string() + " has no recovered word");
  SweepOptions o;
  o.radius = cfg.radius;
  o.jobs = 1;
  o.seed = cfg.seed;
  const SweepReport r = sweep_component(*tag.word, q, o);
  CaseOutcome out;
  out.tallies["zero_signatures"] = r.zero_signatures;
  if (!r.all_signatures_odd() || r.zero_signatures != 0) {
    out.status = Status::kFail;
    out.detail = "seed word " + to_string(*tag.word) + ":" + grid_text(r);
  }
  return out;
}

std::vector<SuiteSpec> build_registry() {
  const std::vector<std::string> sweep_seeds = {"a", "a b- a"};
  std::vector<SuiteSpec> r;
  r.push_back({"omega2", "word Omega^2 (L then R) agrees with the homological Omega^2", {7, 2, {"a", "a b- a", "AB"}, 0},
               omega2_cases, omega2_check});
  r.push_back({"restrictions", "restrictions of string and band modules to <x> and <y>", {8, 0, {}, 10},
               restriction_cases, restriction_check});
  r.push_back({"strings", "M(w) = M(w^-1), M(w) indecomposable, distinct words give distinct modules", {7, 0, {}, 0},
               strings_cases, strings_check});
  r.push_back({"even-string-tensor", "string summands of M(w) (x) M(v) for odd-length w, v", {5, 0, {}, 0},
               even_tensor_cases, even_tensor_check});
  r.push_back({"bensoncarlson", "K | M (x) N iff dim M odd and M = N*, once", {5, 0, {}, 0}, benson_carlson_cases,
               benson_carlson_check});
  r.push_back({"fixedpoints", "Omega^-n K: joint fixed points equal those of each involution", {8, 0, {}, 0},
               fixed_point_cases, fixed_point_check});
  r.push_back({"signature-zero", "non-positive (non-negative) signatures contain a zero", {9, 0, {}, 0},
               signature_zero_cases, signature_zero_check});
  r.push_back({"diamond", "restriction diamond rule on every eligible diamond", {0, 2, sweep_seeds, 0}, seed_cases,
               diamond_check});
  r.push_back({"trichotomy", "signature grid follows [2i,2j] from the seed", {0, 2, sweep_seeds, 0}, seed_cases,
               trichotomy_check});
  r.push_back({"uniqueness", "at most one vertex with signature [0,0]", {0, 2, sweep_seeds, 0}, seed_cases,
               uniqueness_check});
  r.push_back({"duality", "M(0,1)* = M(0,-1)", {0, 1, sweep_seeds, 0}, seed_cases, duality_check});
  r.push_back({"duality-reflection", "M(i,j)* = M(-j,-i)", {0, 1, sweep_seeds, 0}, reflection_cases,
               reflection_check});
  r.push_back({"klein-selftest", "Klein four decomposition: orientation, random blocks, duality, Omega shift",
               {7, 0, {}, 10000}, klein_cases, klein_check});
  r.push_back({"algebraic", "tensor closure of K, K_Y^G and Omega(K_Y)^G", {0, 0, {}, 0}, algebraic_cases,
               algebraic_check});
  r.push_back({"vertex-y-odd", "component of Omega(K_Y)^G: odd signatures, no [0,0]", {0, 2, {}, 0}, vertex_y_cases,
               vertex_y_check});
  return r;
}

const SuiteSpec& find_suite(const std::string& name) {
  for (const auto& s : suite_registry()) {
    if (s.name == name) return s;
  }
  throw Error(ErrorCode::kUnknownSuite, "unknown suite '" + name + "'");
}

// "AB" in a default seed list stands for A B^-1 at the configured q.
Word default_seed(const std::string& text, QParam q) {
  if (text == "AB") {
    return *concat(block_a(q), invert_word(block_b(q)));
  }
  return parse_word(text);
}

Json bounds_json(const SuiteConfig& c) {
  Json seeds = Json::array();
  for (const Word& w : c.seeds) seeds.push_back(to_string(w));
  return {{"max_length", c.max_length}, {"radius", c.radius}, {"seeds", seeds}, {"samples", c.samples},
          {"seed", c.seed}};
}

CaseOutcome guarded(const SuiteSpec& s, const Json& payload, const SuiteConfig& cfg) {
  try {
    return s.check(payload, cfg);
  } catch (const Error& e) {
    return CaseOutcome::fail(std::string(error_code_name(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    return CaseOutcome::fail(std::string("Internal: ") + e.what());
  }
}

}  // namespace

const std::vector<SuiteSpec>& suite_registry() {
  static const std::vector<SuiteSpec> registry = build_registry();
  return registry;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suite_registry()) out.push_back(s.name);
  return out;
}

SuiteConfig resolve_config(const std::string& name, const SuiteConfig& cfg) {
  const SuiteSpec& s = find_suite(name);
  SuiteConfig c = cfg;
  const QParam q(c.q);
  if (c.max_length == 0) c.max_length = s.defaults.max_length;
  if (c.radius == 0) c.radius = s.defaults.radius;
  if (c.samples == 0) c.samples = s.defaults.samples;
  if (c.seeds.empty()) {
    for (const auto& t : s.defaults.seeds) c.seeds.push_back(default_seed(t, q));
  }
  for (const Word& w : c.seeds) {
    if (!validate_word(w, q)) throw Error(ErrorCode::kInvalidWord, "'" + to_string(w) + "' is not in W_q");
  }
  return c;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const SuiteSpec& spec = find_suite(name);
  const SuiteConfig c = resolve_config(name, cfg);
  const std::vector<Json> cases = spec.generate(c);
  std::vector<CaseOutcome> outcomes(cases.size());
  parallel_for(cases.size(), c.jobs, [&](std::size_t k) { outcomes[k] = guarded(spec, cases[k], c); });

  SuiteReport r;
  r.name = name;
  r.q = c.q;
  r.bounds = bounds_json(c);
  r.cases = cases.size();
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const CaseOutcome& o = outcomes[k];
    for (const auto& [key, n] : o.tallies) r.tallies[key] += n;
    if (o.status == Status::kSkip) ++r.skipped;
    if (o.status == Status::kFail) r.failures.push_back({cases[k], o.detail});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CaseOutcome replay_case(const std::string& name, const Json& payload, const SuiteConfig& cfg) {
  return guarded(find_suite(name), payload, resolve_config(name, cfg));
}

Json suite_report_to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"payload", f.payload}, {"detail", f.detail}});
  return {{"suite", r.name}, {"q", r.q},           {"bounds", r.bounds},   {"cases", r.cases},
          {"skipped", r.skipped}, {"passed", r.passed()}, {"failures", failures}, {"tallies", r.tallies},
          {"notes", r.notes},     {"seconds", r.seconds}};
}

std::string suite_report_to_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite " << r.name << " q=" << r.q << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cases
      << " cases, " << r.skipped << " skipped, " << r.failures.size() << " failures, " << r.seconds << " s)\n";
  for (const auto& [k, n] : r.tallies) out << "  " << k << ": " << n << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  std::size_t shown = 0;
  for (const auto& f : r.failures) {
    if (shown++ == 20) {
      out << "  ... " << r.failures.size() - 20 << " more\n";
      break;
    }
    out << "  fail " << f.payload.dump() << ": " << f.detail << "\n";
  }
  return out.str();
}

}  // namespace dihedral
