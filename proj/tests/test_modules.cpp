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
#include "dihedral/klein.hpp"
#include "dihedral/modules.hpp"
#include "fixtures.hpp"

using namespace dihedral;

namespace {

const QParam q2(2);

Rep m_of(const char* text, QParam q = q2) { return string_module(parse_word(text), q); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

BitMatrix companion_t2t1() { return BitMatrix::from_strings({"01", "11"}, 2); }

}  // namespace

TEST(StringModule, ReferenceMatricesExact) {
  const Rep m = m_of("a b- a b a-");
  EXPECT_EQ(m.x(), fixtures::reference_x());
  EXPECT_EQ(m.y(), fixtures::reference_y());
  EXPECT_EQ(m_of("a b- a b a-", QParam(4)).x(), fixtures::reference_x());
}

TEST(StringModule, SmallCases) {
  const Rep k = string_module(Word{}, q2);
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.x().is_identity() && k.y().is_identity());
  const Rep a = m_of("a");
  EXPECT_EQ(a.x(), BitMatrix::from_strings({"10", "11"}, 2));
  EXPECT_TRUE(a.y().is_identity());
  EXPECT_EQ(code_of([] { m_of("a b a b"); }), ErrorCode::kInvalidWord);
}

TEST(Rep, RejectsBrokenRelations) {
  const BitMatrix j = BitMatrix::from_strings({"11", "01"}, 2);
  EXPECT_EQ(code_of([&] { Rep(q2, j * j + j, j); }), ErrorCode::kPreconditionViolated);
  EXPECT_NO_THROW(Rep(q2, j, j));
}

TEST(BandModule, Examples) {
  const Rep b = band_module(parse_word("a b-"), BitMatrix::identity(1), q2);
  EXPECT_EQ(b.dim(), 2u);
  EXPECT_TRUE(is_free_involution(b.x()));
  EXPECT_TRUE(is_free_involution(b.y()));
  const Rep c = band_module(parse_word("a b-"), companion_t2t1(), q2);
  EXPECT_EQ(c.dim(), 4u);
  EXPECT_TRUE(is_free_involution(c.x()) && is_free_involution(c.y()));
}

TEST(BandModule, Errors) {
  EXPECT_EQ(code_of([] { band_module(parse_word("a b"), BitMatrix::identity(1), q2); }), ErrorCode::kInvalidBand);
  EXPECT_EQ(code_of([] { band_module(parse_word("a b- a b-"), BitMatrix::identity(1), q2); }),
            ErrorCode::kInvalidBand);
  EXPECT_EQ(code_of([] { band_module(parse_word("a b-"), BitMatrix(1, 1), q2); }), ErrorCode::kNotInvertible);
}

TEST(RegularModule, Shape) {
  const Rep kg = regular_module(q2);
  EXPECT_EQ(kg.dim(), 8u);
  EXPECT_EQ(rank(kg.x() + BitMatrix::identity(8)), 4u);
  const RadicalSocle rs = radical_socle(kg);
  EXPECT_EQ(rs.radical.dim(), 7u);
  EXPECT_EQ(rs.socle.dim(), 1u);
  for (std::size_t r = 0; r < 8; ++r) {
    std::size_t ones = 0;
    for (std::size_t c = 0; c < 8; ++c) ones += kg.x().get(r, c);
    EXPECT_EQ(ones, 1u);
  }
}

TEST(Restrict, Examples) {
  const KleinRep ky = restrict_klein(m_of("a"), SubgroupId::kKleinY);
  EXPECT_TRUE(ky.g1.is_identity() && ky.g2.is_identity());
  EXPECT_TRUE(is_free_involution(restrict(regular_module(q2), SubgroupId::kGenX).gens[0]));
  const BitMatrix x = restrict(m_of("a b- a b a-"), SubgroupId::kGenX).gens[0];
  EXPECT_EQ(rank(x + BitMatrix::identity(6)), 3u);
  EXPECT_TRUE(is_free_involution(x));
}

TEST(Induce, TrivialFromY) {
  const Rep m = induce(klein_trivial(), SubgroupId::kKleinY, q2);
  EXPECT_EQ(m.dim(), 2u);
  EXPECT_TRUE(isomorphic(m, m_of("a")));
  EXPECT_EQ(induce(klein_regular(), SubgroupId::kKleinX, QParam(4)).dim(), 16u);
  EXPECT_EQ(code_of([] { induce(klein_trivial(), SubgroupId::kGenX, q2); }), ErrorCode::kUnsupportedSubgroup);
}

TEST(Induce, CommutesWithOmegaUpToProjectives) {
  const Rep lhs = induce(klein_heller(klein_trivial(), -1), SubgroupId::kKleinY, q2);
  const Rep rhs = heller(induce(klein_trivial(), SubgroupId::kKleinY, q2), -1);
  EXPECT_TRUE(isomorphic(split_projective(lhs).complement, rhs));
}

TEST(Tensor, UnitAndDimension) {
  const Rep m = m_of("a b- a");
  EXPECT_TRUE(isomorphic(tensor(trivial_module(q2), m), m));
  EXPECT_EQ(tensor(m, m_of("a")).dim(), 8u);
  EXPECT_EQ(code_of([&] { tensor(m, trivial_module(QParam(4))); }), ErrorCode::kQMismatch);
}

TEST(Tensor, EvenFactorGivesEvenSummands) {
  const DecompositionReport r = fitting_decompose(tensor(m_of("a"), dual(m_of("a"))));
  for (const auto& s : r.summands) EXPECT_EQ(s.module.dim() % 2, 0u);
}

TEST(Dual, Basics) {
  const Rep m = m_of("a b- a b a-");
  EXPECT_EQ(dual(dual(m)), m);
  EXPECT_EQ(dual(trivial_module(q2)), trivial_module(q2));
  // Dualising reverses every arrow of the string.
  EXPECT_TRUE(isomorphic(dual(m_of("a b-")), m_of("a- b")));
  EXPECT_TRUE(isomorphic(dual(m_of("a b- a b a-")), m_of("a- b a- b- a")));
}

TEST(RadicalSocle, TopCountsPeaks) {
  const Rep m = m_of("a b- a b a-");
  const RadicalSocle rs = radical_socle(m);
  // a b- a b a-: v1 <-a- v2 -b-> v3 <-a- v4 <-b- v5 -a-> v6; peaks v2, v5.
  EXPECT_EQ(m.dim() - rs.radical.dim(), 2u);
  EXPECT_EQ(rs.socle.dim(), 3u);
  const RadicalSocle k = radical_socle(trivial_module(q2));
  EXPECT_EQ(k.radical.dim(), 0u);
  EXPECT_EQ(k.socle.dim(), 1u);
}

TEST(Heller, TrivialModule) {
  const Rep k = trivial_module(q2);
  const Rep syz = heller(k, -1);
  EXPECT_EQ(syz.dim(), 7u);
  // rad(KG) is M(A^-1 B); M(A B^-1) is its dual, KG/soc.
  EXPECT_TRUE(isomorphic(syz, m_of("a- b- a- b a b")));
  EXPECT_TRUE(isomorphic(heller(k, 1), m_of("a b a b- a- b-")));
}

TEST(Heller, InverseAndOmega2) {
  for (const char* text : {"a", "a b- a", "a b- a b a-", "b a-"}) {
    const Rep m = m_of(text);
    EXPECT_TRUE(isomorphic(heller(heller(m, -1), 1), m)) << text;
    EXPECT_TRUE(isomorphic(heller(heller(m, 1), -1), m)) << text;
  }
  EXPECT_TRUE(isomorphic(heller(m_of("a"), -2), string_module(omega2_word(parse_word("a"), q2), q2)));
}

TEST(SplitProjective, CountsRegularSummands) {
  const Rep m = direct_sum(direct_sum(regular_module(q2), m_of("a b-")), regular_module(q2));
  const ProjectiveSplit s = split_projective(m);
  EXPECT_EQ(s.projective_rank, 2u);
  EXPECT_TRUE(isomorphic(s.complement, m_of("a b-")));
}

TEST(RelativeProjectivity, Higman) {
  EXPECT_TRUE(is_relatively_projective(m_of("a"), SubgroupId::kKleinY));
  EXPECT_FALSE(is_relatively_projective(m_of("a"), SubgroupId::kKleinX));
  EXPECT_TRUE(is_relatively_projective(regular_module(q2), SubgroupId::kKleinX));
  EXPECT_FALSE(is_relatively_projective(trivial_module(q2), SubgroupId::kKleinY));
}

TEST(RestrictionLemma, SmallExhaustive) {
  for (const Word& x : enumerate_words(q2, 0, 6, false)) {
    const Rep m = string_module(x, q2);
    const std::size_t tx = trivial_summands(m.x());
    const std::size_t ty = trivial_summands(m.y());
    if (m.dim() % 2 == 1) {
      EXPECT_EQ(tx, 1u);
      EXPECT_EQ(ty, 1u);
    } else {
      EXPECT_EQ(tx + ty, 2u) << to_string(x);
      EXPECT_TRUE(tx == 0 || ty == 0);
    }
  }
}
