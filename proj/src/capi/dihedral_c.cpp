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

#include "dihedral/dihedral.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "dihedral/algebraic.hpp"
#include "dihedral/error.hpp"
#include "dihedral/iso.hpp"
#include "dihedral/json_io.hpp"
#include "dihedral/klein.hpp"
#include "dihedral/modules.hpp"
#include "dihedral/quiver.hpp"
#include "dihedral/suite.hpp"

struct dh_rep {
  dihedral::Rep rep;
};

using namespace dihedral;

static_assert(static_cast<int>(ErrorCode::kInternal) == DH_INTERNAL);
static_assert(static_cast<int>(ErrorCode::kParseError) == DH_PARSE_ERROR);
static_assert(static_cast<int>(ErrorCode::kNotSignatureEligible) == DH_NOT_SIGNATURE_ELIGIBLE);

namespace {

thread_local std::string g_last_error;

dh_status fail(ErrorCode code, const std::string& what) {
  g_last_error = what;
  return static_cast<dh_status>(code);
}

template <typename F>
dh_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return DH_OK;
  } catch (const Error& e) {
    return fail(e.code(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(ErrorCode::kParseError, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ErrorCode::kInternal, "out of memory");
  } catch (const std::exception& e) {
    return fail(ErrorCode::kInternal, e.what());
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr) throw Error(ErrorCode::kInvalidArgument, std::string(name) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  need(out, "out");
  *out = dup(s);
}

void put(dh_rep** out, Rep m) {
  need(out, "out");
  *out = new dh_rep{std::move(m)};
}

Word word_arg(const char* w) {
  need(w, "word");
  return parse_word(w);
}

const Rep& rep_arg(const dh_rep* m) {
  need(m, "module");
  return m->rep;
}

SubgroupId subgroup_arg(const char* s) {
  need(s, "subgroup");
  return parse_subgroup(s);
}

}  // namespace

extern "C" {

const char* dh_version(void) { return "1.0.0"; }

const char* dh_status_name(dh_status status) { return error_code_name(static_cast<ErrorCode>(status)); }

const char* dh_last_error(void) { return g_last_error.c_str(); }

void dh_string_free(char* s) { std::free(s); }

dh_status dh_word_validate(const char* word, int q, int* valid) {
  return guard([&] {
    need(valid, "valid");
    const Word w = word_arg(word);
    *valid = validate_word(w, QParam(q)) ? 1 : 0;
  });
}

dh_status dh_word_invert(const char* word, char** out) {
  return guard([&] { put(out, to_string(invert_word(word_arg(word)))); });
}

dh_status dh_word_canonical(const char* word, char** out) {
  return guard([&] { put(out, to_string(canonical(word_arg(word)))); });
}

dh_status dh_word_apply_l(const char* word, int q, char** out) {
  return guard([&] { put(out, to_string(apply_l(word_arg(word), QParam(q)))); });
}

dh_status dh_word_apply_r(const char* word, int q, char** out) {
  return guard([&] { put(out, to_string(apply_r(word_arg(word), QParam(q)))); });
}

dh_status dh_word_omega2(const char* word, int q, char** out) {
  return guard([&] { put(out, to_string(omega2_word(word_arg(word), QParam(q)))); });
}

dh_status dh_word_ar_neighbors(const char* word, int q, char** json_out) {
  return guard([&] {
    const ArNeighbors n = ar_neighbors(word_arg(word), QParam(q));
    const Json j = {{"left", to_string(n.left)},
                    {"right", to_string(n.right)},
                    {"translate", to_string(n.translate)},
                    {"has_projective_middle", n.has_projective_middle}};
    put(json_out, j.dump());
  });
}

dh_status dh_rep_trivial(int q, dh_rep** out) {
  return guard([&] { put(out, trivial_module(QParam(q))); });
}

dh_status dh_rep_string(const char* word, int q, dh_rep** out) {
  return guard([&] { put(out, string_module(word_arg(word), QParam(q))); });
}

dh_status dh_rep_band(const char* word, const char* phi_json, int q, dh_rep** out) {
  return guard([&] {
    need(phi_json, "phi");
    put(out, band_module(word_arg(word), matrix_from_json(parse_json(phi_json)), QParam(q)));
  });
}

dh_status dh_rep_regular(int q, dh_rep** out) {
  return guard([&] { put(out, regular_module(QParam(q))); });
}

dh_status dh_rep_induce(const char* klein_json, const char* subgroup, int q, dh_rep** out) {
  return guard([&] {
    need(klein_json, "module");
    put(out, induce(klein_rep_from_json(parse_json(klein_json)), subgroup_arg(subgroup), QParam(q)));
  });
}

dh_status dh_rep_from_json(const char* json, dh_rep** out) {
  return guard([&] {
    need(json, "json");
    put(out, rep_from_json(parse_json(json)));
  });
}

dh_status dh_rep_to_json(const dh_rep* m, char** json_out) {
  return guard([&] { put(json_out, rep_to_json(rep_arg(m)).dump()); });
}

dh_status dh_rep_clone(const dh_rep* m, dh_rep** out) {
  return guard([&] { put(out, rep_arg(m)); });
}

void dh_rep_free(dh_rep* m) { delete m; }

dh_status dh_rep_dim(const dh_rep* m, size_t* dim) {
  return guard([&] {
    need(dim, "dim");
    *dim = rep_arg(m).dim();
  });
}

dh_status dh_rep_q(const dh_rep* m, int* q) {
  return guard([&] {
    need(q, "q");
    *q = rep_arg(m).q().value();
  });
}

dh_status dh_rep_dual(const dh_rep* m, dh_rep** out) {
  return guard([&] { put(out, dual(rep_arg(m))); });
}

dh_status dh_rep_tensor(const dh_rep* a, const dh_rep* b, dh_rep** out) {
  return guard([&] { put(out, tensor(rep_arg(a), rep_arg(b))); });
}

dh_status dh_rep_direct_sum(const dh_rep* a, const dh_rep* b, dh_rep** out) {
  return guard([&] { put(out, direct_sum(rep_arg(a), rep_arg(b))); });
}

dh_status dh_rep_omega(const dh_rep* m, int steps, dh_rep** out) {
  return guard([&] { put(out, heller(rep_arg(m), steps)); });
}

dh_status dh_rep_restrict(const dh_rep* m, const char* subgroup, char** json_out) {
  return guard([&] {
    const SubgroupId s = subgroup_arg(subgroup);
    const Restriction r = restrict(rep_arg(m), s);
    Json j;
    if (r.gens.size() == 1) {
      const std::size_t t = trivial_summands(r.gens[0]);
      j = {{"g", matrix_to_json(r.gens[0])}, {"trivial", t}, {"free", (r.gens[0].rows() - t) / 2}};
    } else {
      const KleinRep k{r.gens[0], r.gens[1]};
      j = klein_rep_to_json(k);
      j["decomposition"] = klein_decomposition_to_json(klein_decompose(k));
    }
    j["subgroup"] = to_string(s);
    put(json_out, j.dump());
  });
}

dh_status dh_rep_radical_socle(const dh_rep* m, char** json_out) {
  return guard([&] {
    const RadicalSocle rs = radical_socle(rep_arg(m));
    const Json j = {{"radical", rs.radical.dim()},
                    {"socle", rs.socle.dim()},
                    {"top", rep_arg(m).dim() - rs.radical.dim()}};
    put(json_out, j.dump());
  });
}

dh_status dh_klein_decompose(const char* klein_json, char** json_out) {
  return guard([&] {
    need(klein_json, "module");
    put(json_out, klein_decomposition_to_json(klein_decompose(klein_rep_from_json(parse_json(klein_json)))).dump());
  });
}

dh_status dh_klein_omega(const char* klein_json, int steps, char** klein_json_out) {
  return guard([&] {
    need(klein_json, "module");
    put(klein_json_out, klein_rep_to_json(klein_heller(klein_rep_from_json(parse_json(klein_json)), steps)).dump());
  });
}

dh_status dh_rep_klein_decompose(const dh_rep* m, const char* subgroup, char** json_out) {
  return guard([&] {
    put(json_out, klein_decomposition_to_json(klein_decompose(restrict_klein(rep_arg(m), subgroup_arg(subgroup)))).dump());
  });
}

dh_status dh_rep_isomorphic(const dh_rep* a, const dh_rep* b, uint64_t seed, dh_iso_verdict* verdict) {
  return guard([&] {
    need(verdict, "verdict");
    switch (is_isomorphic(rep_arg(a), rep_arg(b), seed)) {
      case IsoVerdict::kIsomorphic: *verdict = DH_ISOMORPHIC; break;
      case IsoVerdict::kNotIsomorphic: *verdict = DH_NOT_ISOMORPHIC; break;
      case IsoVerdict::kNotDecided: *verdict = DH_NOT_DECIDED; break;
    }
  });
}

dh_status dh_rep_decompose(const dh_rep* m, uint64_t seed, int identify, int include_modules, char** json_out) {
  return guard([&] {
    DecomposeOptions o;
    o.seed = seed;
    o.identify = identify != 0;
    o.identify_options.seed = seed;
    put(json_out, decomposition_to_json(fitting_decompose(rep_arg(m), o), include_modules != 0).dump());
  });
}

dh_status dh_rep_identify(const dh_rep* m, uint64_t seed, char** json_out) {
  return guard([&] {
    IdentifyOptions o;
    o.seed = seed;
    put(json_out, id_tag_to_json(identify_summand(rep_arg(m), o)).dump());
  });
}

dh_status dh_rep_signature(const dh_rep* m, char** json_out) {
  return guard([&] { put(json_out, signature_result_to_json(signature_of(rep_arg(m))).dump()); });
}

dh_status dh_quiver_sweep(const char* word, int q, int radius, uint64_t seed, size_t jobs, dh_format format,
                          char** out) {
  return guard([&] {
    if (radius < 0) throw Error(ErrorCode::kInvalidArgument, "radius must be non-negative");
    SweepOptions o;
    o.radius = radius;
    o.seed = seed;
    o.jobs = jobs;
    const Word w = word_arg(word);
    const QParam qp(q);
    if (!validate_word(w, qp)) throw Error(ErrorCode::kInvalidWord, "'" + to_string(w) + "' is not in W_q");
    const SweepReport r = sweep_component(w, qp, o);
    if (format == DH_FORMAT_DOT) {
      put(out, r.to_dot());
    } else if (format == DH_FORMAT_JSON) {
      put(out, sweep_to_json(r).dump());
    } else {
      throw Error(ErrorCode::kInvalidArgument, "sweep output is JSON or DOT");
    }
  });
}

dh_status dh_quiver_vertex(const char* word, int q, int i, int j, dh_rep** out, char** path_json) {
  return guard([&] {
    VertexModule v = coordinate_module(word_arg(word), {i, j}, QParam(q));
    if (path_json != nullptr) {
      const Json p = {{"path", v.path == VertexPath::kWord ? "word" : "homological"},
                      {"word", v.word ? Json(to_string(*v.word)) : Json(nullptr)},
                      {"note", v.note}};
      *path_json = dup(p.dump());
    }
    put(out, std::move(v.module));
  });
}

dh_status dh_algebraic_probe(const dh_rep* seed_module, size_t max_dim, size_t max_classes, size_t max_rounds,
                             uint64_t seed, size_t jobs, char** json_out) {
  return guard([&] {
    ProbeOptions o;
    if (max_dim != 0) o.budget.max_dim = max_dim;
    if (max_classes != 0) o.budget.max_classes = max_classes;
    if (max_rounds != 0) o.budget.max_rounds = max_rounds;
    o.seed = seed;
    o.jobs = jobs;
    put(json_out, probe_to_json(tensor_closure_probe(rep_arg(seed_module), o)).dump());
  });
}

dh_status dh_suite_names(char** json_out) {
  return guard([&] {
    Json j = Json::array();
    for (const auto& s : suite_registry()) j.push_back({{"name", s.name}, {"summary", s.summary}});
    put(json_out, j.dump());
  });
}

dh_status dh_verify(const char* suite, const char* config_json, dh_format format, char** out, int* passed) {
  return guard([&] {
    need(suite, "suite");
    SuiteConfig c;
    if (config_json != nullptr) {
      const Json j = parse_json(config_json);
      c.q = j.value("q", 2);
      c.max_length = j.value("max_length", std::size_t{0});
      c.radius = j.value("radius", 0);
      c.samples = j.value("samples", std::size_t{0});
      c.seed = j.value("seed", std::uint64_t{1});
      c.jobs = j.value("jobs", std::size_t{0});
      if (j.contains("seeds")) {
        for (const auto& w : j.at("seeds")) c.seeds.push_back(word_from_json(w));
      }
    }
    const SuiteReport r = run_suite(suite, c);
    if (passed != nullptr) *passed = r.passed() ? 1 : 0;
    if (format == DH_FORMAT_TEXT) {
      put(out, suite_report_to_text(r));
    } else if (format == DH_FORMAT_JSON) {
      put(out, suite_report_to_json(r).dump());
    } else {
      throw Error(ErrorCode::kInvalidArgument, "suite reports are JSON or text");
    }
  });
}

}  // extern "C"
