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
#include "dihedral/json_io.hpp"
#include "fixtures.hpp"

using namespace dihedral;

namespace {
const QParam q2(2);

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}
}  // namespace

TEST(Json, MatrixRoundTrip) {
  const BitMatrix a = fixtures::reference_x();
  const Json j = matrix_to_json(a);
  EXPECT_EQ(j["rows"], 6);
  EXPECT_EQ(j["cols"], 6);
  EXPECT_EQ(matrix_from_json(j), a);
  EXPECT_EQ(matrix_from_json(parse_json(j.dump())), a);
}

TEST(Json, RepRoundTrip) {
  for (const char* w : {"", "a", "a b- a b a-"}) {
    const Rep m = string_module(parse_word(w), q2);
    EXPECT_EQ(rep_from_json(parse_json(rep_to_json(m).dump())), m) << w;
  }
}

TEST(Json, KleinRoundTrip) {
  const KleinRep k = klein_regular();
  const KleinRep back = klein_rep_from_json(klein_rep_to_json(k));
  EXPECT_EQ(back.g1, k.g1);
  EXPECT_EQ(back.g2, k.g2);
}

TEST(Json, Words) {
  EXPECT_EQ(word_from_json(Json("a b- a")), parse_word("a b- a"));
  EXPECT_EQ(word_from_json(Json::array({"a", "b-", "a"})), parse_word("a b- a"));
  EXPECT_EQ(word_from_json(word_to_json(parse_word("a- b"))), parse_word("a- b"));
}

TEST(Json, Errors) {
  EXPECT_EQ(code_of([] { parse_json("{\"q\": 2,"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { rep_from_json(parse_json("{\"q\": 2}")); }), ErrorCode::kParseError);
  const Json bad = {{"q", 2},
                    {"x", {{"rows", 2}, {"cols", 2}, {"data", {"11", "01"}}}},
                    {"y", {{"rows", 2}, {"cols", 2}, {"data", {"11", "11"}}}}};
  EXPECT_NE(code_of([&] { rep_from_json(bad); }), ErrorCode::kOk);
  const Json klein = {{"g1", {{"rows", 2}, {"cols", 2}, {"data", {"11", "01"}}}},
                      {"g2", {{"rows", 2}, {"cols", 2}, {"data", {"10", "11"}}}}};
  EXPECT_NE(code_of([&] { klein_rep_from_json(klein); }), ErrorCode::kOk);
}

TEST(Json, Reports) {
  const Rep m = direct_sum(string_module(parse_word("a"), q2), trivial_module(q2));
  const Json d = decomposition_to_json(fitting_decompose(m), true);
  EXPECT_EQ(d["dim"], 3);
  EXPECT_EQ(d["summands"].size(), 2u);
  EXPECT_TRUE(d["summands"][0].contains("module"));
  const Json s = signature_result_to_json(signature_of(string_module(parse_word("a b- a"), q2)));
  EXPECT_EQ(s["signature"], Json::array({0, 0}));
}
