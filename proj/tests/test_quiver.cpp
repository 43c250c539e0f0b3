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

#include <gtest/gtest.h>

#include "dihedral/error.hpp"
#include "dihedral/iso.hpp"
#include "dihedral/quiver.hpp"

using namespace dihedral;

namespace {

const QParam q2(2);

Rep m_of(const char* text) { return string_module(parse_word(text), q2); }

std::map<Coordinate, Signature> grid(int radius, const std::function<Signature(int, int)>& f) {
  std::map<Coordinate, Signature> g;
  for (int i = -radius; i <= radius; ++i) {
    for (int j = -radius; j <= radius; ++j) g[{i, j}] = f(i, j);
  }
  return g;
}

}  // namespace

TEST(Coordinates, WordPath) {
  const Word w = parse_word("a b- a");
  EXPECT_EQ(*coordinate_word(w, {0, 0}, q2), w);
  EXPECT_EQ(*coordinate_word(w, {1, 0}, q2), apply_l(w, q2));
  EXPECT_EQ(*coordinate_word(w, {0, 1}, q2), apply_r(w, q2));
  EXPECT_EQ(*coordinate_word(w, {-1, 0}, q2), apply_l_inverse(w, q2));
  EXPECT_EQ(*coordinate_word(w, {1, 1}, q2), omega2_word(w, q2));
  const VertexModule v = coordinate_module(w, {1, -1}, q2);
  EXPECT_EQ(v.path, VertexPath::kWord);
  EXPECT_EQ(v.module, string_module(*v.word, q2));
}

TEST(Coordinates, DiagonalIsOmega2) {
  const Word w = parse_word("a b- a");
  for (int k = -2; k <= 2; ++k) {
    const VertexModule v = coordinate_module(w, {k, k}, q2);
    EXPECT_TRUE(isomorphic(v.module, heller(string_module(w, q2), -2 * k))) << k;
  }
}

TEST(Diamond, AuslanderReitenSequences) {
  const Word w = parse_word("a b- a");
  for (int i = -1; i <= 0; ++i) {
    for (int j = -1; j <= 0; ++j) {
      const Rep a = coordinate_module(w, {i, j}, q2).module;
      const Rep b = coordinate_module(w, {i, j + 1}, q2).module;
      const Rep c = coordinate_module(w, {i + 1, j}, q2).module;
      const Rep d = coordinate_module(w, {i + 1, j + 1}, q2).module;
      EXPECT_TRUE(check_diamond(a, b, c, d, SubgroupId::kKleinX)) << i << "," << j;
      EXPECT_TRUE(check_diamond(a, b, c, d, SubgroupId::kKleinY)) << i << "," << j;
    }
  }
}

TEST(Diamond, NegativeControl) {
  const Rep k = trivial_module(q2);
  EXPECT_FALSE(check_diamond(k, m_of("a"), k, m_of("b"), SubgroupId::kKleinY));
  EXPECT_FALSE(check_diamond(k, m_of("a"), k, m_of("b"), SubgroupId::kKleinX));
}

TEST(Pattern, Classification) {
  const Signature base = Signature::of(0, 0);
  EXPECT_EQ(classify_pattern(grid(2, [](int i, int j) { return Signature::of(2 * i, 2 * j); }), base),
            Pattern::kDiagonalBoth);
  EXPECT_EQ(classify_pattern(grid(2, [](int i, int) { return Signature::of(2 * i, 2 * i); }), base),
            Pattern::kDiagonalI);
  EXPECT_EQ(classify_pattern(grid(2, [](int, int j) { return Signature::of(2 * j, 2 * j); }), base),
            Pattern::kDiagonalJ);
  EXPECT_EQ(classify_pattern(grid(1, [](int, int) { return Signature::of(0, 0); }), base), Pattern::kNone);
}

TEST(Pattern, CandidatesSatisfyAdditivity) {
  // Each candidate pattern is additive along every mesh: sig(A) + sig(D) = sig(B) + sig(C) as multisets.
  const std::vector<std::function<Signature(int, int)>> patterns = {
      [](int i, int j) { return Signature::of(1 + 2 * i, 3 + 2 * j); },
      [](int i, int) { return Signature::of(1 + 2 * i, 3 + 2 * i); },
      [](int, int j) { return Signature::of(1 + 2 * j, 3 + 2 * j); }};
  for (const auto& f : patterns) {
    for (int i = -2; i < 2; ++i) {
      for (int j = -2; j < 2; ++j) {
        const Signature a = f(i, j), b = f(i, j + 1), c = f(i + 1, j), d = f(i + 1, j + 1);
        EXPECT_EQ(a.r + a.s + d.r + d.s, b.r + b.s + c.r + c.s);
      }
    }
  }
}

TEST(Sweep, SeedAB) {
  SweepOptions o;
  o.radius = 1;
  const SweepReport r = sweep_component(parse_word("a b- a"), q2, o);
  EXPECT_EQ(r.vertices.size(), 9u);
  EXPECT_EQ(r.count(DiamondReport::Status::kFails), 0u);
  EXPECT_EQ(r.omega2_failed, 0u);
  ASSERT_TRUE(r.base_signature.has_value());
  EXPECT_EQ(*r.base_signature, Signature::of(0, 0));
  EXPECT_EQ(r.pattern, Pattern::kDiagonalBoth);
  EXPECT_EQ(r.zero_signatures, 1u);
  EXPECT_TRUE(r.diagonal_ok);
}

TEST(Sweep, DotOutput) {
  SweepOptions o;
  o.radius = 1;
  const std::string dot = sweep_component(parse_word("a b- a"), q2, o).to_dot();
  EXPECT_EQ(dot.rfind("digraph component {", 0), 0u);
  EXPECT_NE(dot.find("\"(0,0)\""), std::string::npos);
  EXPECT_NE(dot.find("->"), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
}

TEST(Sweep, Deterministic) {
  SweepOptions o;
  o.radius = 1;
  o.jobs = 1;
  const SweepReport a = sweep_component(parse_word("a"), q2, o);
  o.jobs = 4;
  const SweepReport b = sweep_component(parse_word("a"), q2, o);
  EXPECT_EQ(a.to_dot(), b.to_dot());
}
