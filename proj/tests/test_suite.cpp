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

#include <algorithm>

#include "dihedral/error.hpp"
#include "dihedral/json_io.hpp"
#include "dihedral/suite.hpp"

using namespace dihedral;

TEST(Suites, Registry) {
  const auto names = suite_names();
  for (const char* n : {"omega2", "restrictions", "strings", "diamond", "trichotomy", "uniqueness", "duality",
                        "klein-selftest", "algebraic", "bensoncarlson", "even-string-tensor"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  }
}

TEST(Suites, UnknownSuite) {
  try {
    run_suite("no-such-suite", SuiteConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownSuite);
  }
}

TEST(Suites, SmallRunsPass) {
  SuiteConfig c;
  c.max_length = 4;
  for (const char* n : {"omega2", "restrictions", "strings", "fixedpoints"}) {
    const SuiteReport r = run_suite(n, c);
    EXPECT_TRUE(r.passed()) << n << "\n" << suite_report_to_text(r);
    EXPECT_GT(r.cases, 0u) << n;
  }
}

TEST(Suites, ReportJsonShape) {
  SuiteConfig c;
  c.max_length = 3;
  const Json j = suite_report_to_json(run_suite("strings", c));
  for (const char* k : {"suite", "q", "bounds", "cases", "skipped", "failures", "passed", "seconds"}) {
    EXPECT_TRUE(j.contains(k)) << k;
  }
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Suites, FailureReplays) {
  SuiteConfig c;
  c.radius = 1;
  const SuiteReport r = run_suite("duality", c);
  ASSERT_FALSE(r.passed());
  ASSERT_FALSE(r.failures.empty());
  const CaseOutcome again = replay_case("duality", r.failures.front().payload, c);
  EXPECT_EQ(again.status, CaseOutcome::Status::kFail);
  EXPECT_EQ(again.detail, r.failures.front().detail);
}
