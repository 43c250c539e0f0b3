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

#include "dihedral/algebraic.hpp"

using namespace dihedral;

namespace {
const QParam q2(2);
}

TEST(Probe, TrivialIsClosed) {
  const ProbeReport r = tensor_closure_probe(trivial_module(q2));
  EXPECT_EQ(r.verdict, ProbeVerdict::kClosed);
  EXPECT_EQ(r.classes.size(), 1u);
  ASSERT_TRUE(r.verified.has_value());
  EXPECT_TRUE(*r.verified);
}

TEST(Probe, InducedTrivialIsClosed) {
  const Rep m = induce(klein_trivial(), SubgroupId::kKleinY, q2);
  const ProbeReport r = tensor_closure_probe(m);
  EXPECT_EQ(r.verdict, ProbeVerdict::kClosed);
  EXPECT_TRUE(r.verified.value_or(false));
}

TEST(Probe, InducedSyzygyGrows) {
  const Rep m = split_projective(induce(klein_heller(klein_trivial(), -1), SubgroupId::kKleinY, q2)).complement;
  ProbeOptions o;
  o.budget.max_rounds = 4;
  const ProbeReport r = tensor_closure_probe(m, o);
  EXPECT_NE(r.verdict, ProbeVerdict::kClosed);
  EXPECT_TRUE(r.signatures_grow());
  EXPECT_GE(r.trace.size(), 3u);
}

TEST(Probe, OrderDoesNotChangeClasses) {
  const Rep m = string_module(parse_word("a"), q2);
  ProbeOptions o;
  const ProbeReport a = tensor_closure_probe(m, o);
  o.reverse_order = true;
  const ProbeReport b = tensor_closure_probe(m, o);
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_EQ(a.classes.size(), b.classes.size());
}
