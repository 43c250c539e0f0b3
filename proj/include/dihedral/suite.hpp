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

#pragma once

// Named verification suites. Each suite is a registration: a generator of
// case payloads and a check that decides one payload. A failing payload
// replays to the same outcome through replay_case.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dihedral/json_io.hpp"
#include "dihedral/word.hpp"

namespace dihedral {

// Zero / empty fields take the suite's defaults.
struct SuiteConfig {
  int q = 2;
  std::size_t max_length = 0;
  int radius = 0;
  std::vector<Word> seeds;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::size_t jobs = 0;
};

struct CaseOutcome {
  enum class Status { kPass, kFail, kSkip };
  Status status = Status::kPass;
  std::string detail;
  std::map<std::string, std::size_t> tallies;

  static CaseOutcome pass() { return {}; }
  static CaseOutcome fail(std::string why) { return {Status::kFail, std::move(why), {}}; }
  static CaseOutcome skip(std::string why) { return {Status::kSkip, std::move(why), {}}; }
};

struct SuiteFailure {
  Json payload;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  int q = 2;
  Json bounds;
  std::size_t cases = 0;
  std::size_t skipped = 0;
  std::vector<SuiteFailure> failures;
  std::map<std::string, std::size_t> tallies;
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

struct SuiteDefaults {
  std::size_t max_length = 0;
  int radius = 0;
  std::vector<std::string> seeds;
  std::size_t samples = 0;
};

struct SuiteSpec {
  std::string name;
  std::string summary;
  SuiteDefaults defaults;
  std::function<std::vector<Json>(const SuiteConfig&)> generate;
  std::function<CaseOutcome(const Json&, const SuiteConfig&)> check;
};

const std::vector<SuiteSpec>& suite_registry();
std::vector<std::string> suite_names();

// Fills defaulted fields of cfg from the suite's registration.
SuiteConfig resolve_config(const std::string& name, const SuiteConfig& cfg);

// Throws Error(kUnknownSuite) for unregistered names.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg = {});
CaseOutcome replay_case(const std::string& name, const Json& payload, const SuiteConfig& cfg = {});

Json suite_report_to_json(const SuiteReport& r);
std::string suite_report_to_text(const SuiteReport& r);

}  // namespace dihedral
