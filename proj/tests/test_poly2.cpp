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
#include "dihedral/poly2.hpp"

using namespace dihedral;

TEST(Poly2, ParseAndPrint) {
  EXPECT_EQ(Poly2::parse("1+t+t^2").to_string(), "1+t+t^2");
  EXPECT_EQ(Poly2::parse("t^3+t+1"), Poly2::parse("1+t+t^3"));
  EXPECT_EQ(Poly2::parse("0").degree(), -1);
  EXPECT_THROW(Poly2::parse("1+x"), Error);
}

TEST(Poly2, Arithmetic) {
  const Poly2 f = Poly2::parse("1+t");
  EXPECT_EQ(f * f, Poly2::parse("1+t^2"));
  const auto [q, r] = Poly2::parse("1+t^3").divmod(f);
  EXPECT_EQ(q, Poly2::parse("1+t+t^2"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(Poly2::parse("1+t^2"), Poly2::parse("1+t^3")), f);
}

TEST(Poly2, IrreducibleCountsOverGF2) {
  // Irreducible polynomials of degree 1..6: 2, 1, 2, 3, 6, 9.
  const std::size_t expected[] = {2, 1, 2, 3, 6, 9};
  for (std::size_t d = 1; d <= 6; ++d) {
    std::size_t n = 0;
    for (unsigned low = 0; low < (1u << d); ++low) {
      Poly2 f = Poly2::monomial(d);
      for (std::size_t i = 0; i < d; ++i) f.set_coeff(i, (low >> i) & 1);
      n += is_irreducible(f) ? 1 : 0;
    }
    EXPECT_EQ(n, expected[d - 1]) << d;
  }
}

TEST(Poly2, FactorRecombines) {
  for (unsigned bits = 2; bits < 512; ++bits) {
    Poly2 f;
    for (std::size_t i = 0; i < 9; ++i) f.set_coeff(i, (bits >> i) & 1);
    Poly2 prod = Poly2::constant(true);
    for (const auto& [p, e] : factor(f)) {
      ASSERT_TRUE(is_irreducible(p));
      for (std::size_t k = 0; k < e; ++k) prod = prod * p;
    }
    ASSERT_EQ(prod, f) << f.to_string();
  }
}

TEST(Smith, CompanionPencil) {
  // Companion of (1+t+t^2)^2 = 1+t^2+t^4: subdiagonal ones, last column 1,0,1,0.
  const BitMatrix comp = BitMatrix::from_strings({"0001", "1000", "0101", "0010"}, 4);
  const auto f = smith_invariant_factors(linear_pencil(comp, BitMatrix::identity(4)));
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f.back(), Poly2::parse("1+t^2+t^4"));
  for (std::size_t i = 0; i + 1 < f.size(); ++i) EXPECT_TRUE(f[i].is_one());
  EXPECT_EQ(factor(f.back()).size(), 1u);
  EXPECT_EQ(factor(f.back()).front().second, 2u);
}

TEST(Smith, RankDeficientPencil) {
  const BitMatrix u = BitMatrix::from_strings({"10", "00"}, 2);
  const BitMatrix v = BitMatrix::from_strings({"01", "00"}, 2);
  EXPECT_EQ(smith_invariant_factors(linear_pencil(u, v)).size(), 1u);
}
