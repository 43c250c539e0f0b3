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

// Acceptance run: one PASS/FAIL line per criterion, driven through the C API.
//
// Exit status is 0 when the set of failing criteria equals the recorded
// expected set (default "7,8", override with --expect-fail LIST or
// --expect-fail none). Any other failure, or an expected failure that
// passes, exits 1.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dihedral/dihedral.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (!detail.empty()) detail += "; ";
    detail += what;
    ok = false;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  dh_string_free(s);
  return out;
}

std::string err(dh_status st) { return std::string(dh_status_name(st)) + ": " + dh_last_error(); }

const std::vector<std::string> kAlpha = {"100000", "110000", "001000", "001100", "000011", "000001"};
const std::vector<std::string> kBeta = {"100000", "011000", "001000", "000100", "000110", "000001"};

void fixture(int q, Outcome& o) {
  dh_rep* m = nullptr;
  dh_status st = dh_rep_string("a b- a b a-", q, &m);
  if (st != DH_OK) return o.require(false, err(st));
  char* text = nullptr;
  st = dh_rep_to_json(m, &text);
  dh_rep_free(m);
  if (st != DH_OK) return o.require(false, err(st));
  const json j = json::parse(take(text));
  o.require(j["x"]["data"].get<std::vector<std::string>>() == kAlpha, "x differs from alpha");
  o.require(j["y"]["data"].get<std::vector<std::string>>() == kBeta, "y differs from beta");
  o.require(j["q"] == q, "q not recorded");
}

void suite(const char* name, const json& cfg, Outcome& o) {
  char* out = nullptr;
  int passed = 0;
  const dh_status st = dh_verify(name, cfg.dump().c_str(), DH_FORMAT_JSON, &out, &passed);
  if (st != DH_OK) return o.require(false, std::string(name) + " " + err(st));
  const json r = json::parse(take(out));
  std::ostringstream s;
  s << name << " " << r["cases"] << " cases";
  if (r["skipped"].get<std::size_t>() > 0) s << ", " << r["skipped"] << " skipped";
  if (!passed) {
    s << ", " << r["failures"].size() << " failures";
    if (!r["failures"].empty()) s << " (first: " << r["failures"][0]["detail"].get<std::string>() << ")";
  }
  o.require(passed != 0, s.str());
  if (passed) o.note(s.str());
}

void sweep_checks(const char* word, int q, int radius, Outcome& o) {
  char* out = nullptr;
  const dh_status st = dh_quiver_sweep(word, q, radius, 1, 0, DH_FORMAT_JSON, &out);
  if (st != DH_OK) return o.require(false, std::string(word) + " " + err(st));
  const json r = json::parse(take(out));
  std::size_t holds = 0, fails = 0, skipped = 0, unavailable = 0;
  for (const auto& d : r["diamonds"]) {
    const std::string s = d["status"];
    holds += s == "holds";
    fails += s == "fails";
    skipped += s == "skipped";
    unavailable += s == "unavailable";
  }
  const std::string tag = std::string("seed '") + word + "'";
  o.require(fails == 0, tag + ": " + std::to_string(fails) + " diamonds fail");
  o.require(unavailable == 0, tag + ": " + std::to_string(unavailable) + " diamonds unavailable");
  o.require(r["omega2_failed"] == 0, tag + ": Omega^2 cross-check failed");
  o.require(r["pattern"] == "(i)", tag + ": pattern " + r["pattern"].get<std::string>());
  o.require(r["zero_signatures"] == 1, tag + ": " + r["zero_signatures"].dump() + " [0,0] vertices");
  o.require(r["diagonal_ok"] == true, tag + ": diagonal off [2i,2i]");
  if (o.ok) {
    o.note(tag + " " + std::to_string(holds) + " diamonds hold, " + std::to_string(skipped) + " skipped");
  }
}

void induced_seed_is_a(int q, Outcome& o) {
  const json k = {{"g1", {{"rows", 1}, {"cols", 1}, {"data", {"1"}}}},
                  {"g2", {{"rows", 1}, {"cols", 1}, {"data", {"1"}}}}};
  dh_rep* m = nullptr;
  dh_status st = dh_rep_induce(k.dump().c_str(), "Y", q, &m);
  if (st != DH_OK) return o.require(false, err(st));
  char* out = nullptr;
  st = dh_rep_identify(m, 1, &out);
  dh_rep_free(m);
  if (st != DH_OK) return o.require(false, err(st));
  const json t = json::parse(take(out));
  o.require(t["word"] == "a", "K_Y induced is " + t.dump());
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

std::set<int> parse_set(const std::string& s) {
  std::set<int> out;
  if (s == "none" || s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected = {7, 8};
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      expected = parse_set(argv[++i]);
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = parse_set(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--expect-fail LIST|none] [--only LIST]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "string module fixture, q=2", 1, [](Outcome& o) { fixture(2, o); }},
      {2, "Omega^2 word/homological agreement, l<=7", 120,
       [](Outcome& o) { suite("omega2", {{"q", 2}, {"max_length", 7}}, o); }},
      {3, "restriction shapes, l<=8 plus 10 bands", 120,
       [](Outcome& o) { suite("restrictions", {{"q", 2}, {"max_length", 8}, {"samples", 10}}, o); }},
      {4, "even string tensor counts, l<=5", 600,
       [](Outcome& o) { suite("even-string-tensor", {{"q", 2}, {"max_length", 5}}, o); }},
      {5, "trivial summand criterion, l<=5", 600,
       [](Outcome& o) { suite("bensoncarlson", {{"q", 2}, {"max_length", 5}}, o); }},
      {6, "signature zero, odd l<=9, stated and dual", 120,
       [](Outcome& o) { suite("signature-zero", {{"q", 2}, {"max_length", 9}}, o); }},
      {7, "quiver sweeps a, a b- a at radius 2", 300,
       [](Outcome& o) {
         induced_seed_is_a(2, o);
         sweep_checks("a", 2, 2, o);
         sweep_checks("a b- a", 2, 2, o);
       }},
      {8, "vertex-Y odd component, radius 2", 300,
       [](Outcome& o) { suite("vertex-y-odd", {{"q", 2}, {"radius", 2}}, o); }},
      {9, "tensor closure probes", 600, [](Outcome& o) { suite("algebraic", {{"q", 2}}, o); }},
      {10, "Klein decomposition self-tests, 10^4 samples", 300,
       [](Outcome& o) { suite("klein-selftest", {{"q", 2}, {"samples", 10000}}, o); }},
      {11, "q=4 smoke: 1-3 at l<=9, 7 at radius 1", 1800,
       [](Outcome& o) {
         fixture(4, o);
         suite("omega2", {{"q", 4}, {"max_length", 9}}, o);
         suite("restrictions", {{"q", 4}, {"max_length", 9}, {"samples", 10}}, o);
         sweep_checks("a", 4, 1, o);
         sweep_checks("a b- a", 4, 1, o);
       }},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < c.limit_seconds, "over time limit");
    if (!o.ok) failed.insert(c.id);
    std::printf("%s %2d %s [%.2f s / %.0f s] %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs, c.limit_seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }

  std::set<int> expect_here;
  for (int id : expected) {
    if (only.empty() || only.count(id)) expect_here.insert(id);
  }
  if (failed == expect_here) {
    std::printf("failures match the expected set (%zu)\n", expect_here.size());
    return 0;
  }
  std::printf("failures differ from the expected set\n");
  return 1;
}
