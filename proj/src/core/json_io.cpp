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

#include "dihedral/json_io.hpp"

#include "dihedral/error.hpp"

namespace dihedral {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kParseError, what);
}

}  // namespace

Json matrix_to_json(const BitMatrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", m.to_strings()}};
}

BitMatrix matrix_from_json(const Json& j) {
  require(j.is_object() && j.contains("data") && j["data"].is_array(), "matrix needs a \"data\" array");
  std::vector<std::string> rows;
  for (const auto& r : j["data"]) {
    require(r.is_string(), "matrix rows must be 0/1 strings");
    rows.push_back(r.get<std::string>());
  }
  const std::size_t cols = j.contains("cols") ? j["cols"].get<std::size_t>() : 0;
  BitMatrix m;
  try {
    m = BitMatrix::from_strings(rows, cols);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (j.contains("rows")) require(j["rows"].get<std::size_t>() == m.rows(), "matrix \"rows\" disagrees with data");
  if (j.contains("cols")) require(j["cols"].get<std::size_t>() == m.cols(), "matrix \"cols\" disagrees with data");
  return m;
}

Json rep_to_json(const Rep& m) {
  return {{"q", m.q().value()}, {"x", matrix_to_json(m.x())}, {"y", matrix_to_json(m.y())}};
}

Rep rep_from_json(const Json& j) {
  require(j.is_object() && j.contains("q") && j.contains("x") && j.contains("y"),
          "module needs \"q\", \"x\" and \"y\"");
  return Rep(QParam(j["q"].get<int>()), matrix_from_json(j["x"]), matrix_from_json(j["y"]));
}

Json klein_rep_to_json(const KleinRep& m) {
  return {{"g1", matrix_to_json(m.g1)}, {"g2", matrix_to_json(m.g2)}};
}

KleinRep klein_rep_from_json(const Json& j) {
  require(j.is_object() && j.contains("g1") && j.contains("g2"), "Klein module needs \"g1\" and \"g2\"");
  KleinRep m{matrix_from_json(j["g1"]), matrix_from_json(j["g2"])};
  if (!m.valid()) throw Error(ErrorCode::kPreconditionViolated, "g1, g2 are not commuting involutions");
  return m;
}

Word word_from_json(const Json& j) {
  if (j.is_string()) return parse_word(j.get<std::string>());
  require(j.is_array(), "word must be a string or an array of letters");
  std::string text;
  for (const auto& t : j) {
    require(t.is_string(), "word letters must be strings");
    text += t.get<std::string>() + " ";
  }
  return parse_word(text);
}

Json word_to_json(const Word& w) { return to_string(w); }

Json summand_to_json(const KleinSummand& s) {
  switch (s.kind) {
    case KleinSummand::Kind::kOmega: return {{"kind", "omega"}, {"n", s.n}};
    case KleinSummand::Kind::kFree: return {{"kind", "free"}};
    case KleinSummand::Kind::kPeriodic:
      return {{"kind", "periodic"}, {"poly", s.poly.to_string()}, {"power", s.power}};
    case KleinSummand::Kind::kPeriodicInfinity: return {{"kind", "periodic_infinity"}, {"power", s.power}};
  }
  return {};
}

Json klein_decomposition_to_json(const KleinDecomposition& d) {
  Json out = Json::array();
  for (const auto& [s, m] : d.terms()) {
    Json e = summand_to_json(s);
    e["mult"] = m;
    out.push_back(std::move(e));
  }
  return out;
}

Json signature_to_json(const Signature& s) { return Json::array({s.r, s.s}); }

Json signature_result_to_json(const SignatureResult& s) {
  return {{"signature", signature_to_json(s.signature)},
          {"active", to_string(s.active)},
          {"X", klein_decomposition_to_json(s.on_x)},
          {"Y", klein_decomposition_to_json(s.on_y)}};
}

Json id_tag_to_json(const IdTag& t) {
  Json out;
  switch (t.kind) {
    case IdTag::Kind::kStringWord:
    case IdTag::Kind::kString: out["kind"] = "string"; break;
    case IdTag::Kind::kBand: out["kind"] = "band"; break;
    case IdTag::Kind::kProjective: out["kind"] = "projective"; break;
    case IdTag::Kind::kUnidentified: out["kind"] = "unidentified"; break;
  }
  out["word"] = t.word ? Json(to_string(*t.word)) : Json(nullptr);
  return out;
}

Json decomposition_to_json(const DecompositionReport& r, bool include_modules) {
  Json summands = Json::array();
  for (const auto& s : r.summands) {
    Json e = {{"dim", s.module.dim()},
              {"mult", s.multiplicity},
              {"tag", id_tag_to_json(s.tag)},
              {"certified", s.certified}};
    if (include_modules) e["module"] = rep_to_json(s.module);
    summands.push_back(std::move(e));
  }
  return {{"dim", r.dim}, {"seed", r.seed}, {"all_certified", r.all_certified()}, {"summands", summands}};
}

Json sweep_to_json(const SweepReport& r) {
  Json vertices = Json::array();
  for (const auto& v : r.vertices) {
    Json e = {{"i", v.at.i}, {"j", v.at.j}, {"available", v.available}};
    if (v.available) {
      e["signature"] = signature_to_json(v.signature);
      e["active"] = to_string(v.active);
      e["dim"] = v.dim;
      e["path"] = v.path == VertexPath::kWord ? "word" : "homological";
      e["word"] = v.word ? Json(to_string(*v.word)) : Json(nullptr);
      e["relatively_projective"] = v.y_projective;
    } else {
      e["reason"] = v.reason;
    }
    vertices.push_back(std::move(e));
  }
  Json diamonds = Json::array();
  for (const auto& d : r.diamonds) {
    Json e = {{"i", d.end.i}, {"j", d.end.j}, {"status", to_string(d.status)}};
    if (!d.reason.empty()) e["reason"] = d.reason;
    diamonds.push_back(std::move(e));
  }
  return {{"base", to_string(r.base)},
          {"q", r.q},
          {"radius", r.radius},
          {"pattern", to_string(r.pattern)},
          {"base_signature", r.base_signature ? signature_to_json(*r.base_signature) : Json(nullptr)},
          {"zero_signatures", r.zero_signatures},
          {"diagonal_ok", r.diagonal_ok},
          {"omega2_checked", r.omega2_checked},
          {"omega2_failed", r.omega2_failed},
          {"vertices", vertices},
          {"diamonds", diamonds}};
}

Json probe_to_json(const ProbeReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"dim", c.module.dim()},
                       {"tag", id_tag_to_json(c.tag)},
                       {"signature", c.signature ? signature_to_json(*c.signature) : Json(nullptr)},
                       {"round", c.round}});
  }
  Json trace = Json::array();
  for (const auto& t : r.trace) {
    trace.push_back({{"round", t.round},
                     {"new_classes", t.new_classes},
                     {"max_signature", t.max_signature ? Json(*t.max_signature) : Json(nullptr)}});
  }
  return {{"verdict", to_string(r.verdict)},
          {"reason", r.reason},
          {"rounds", r.rounds},
          {"seed", r.seed},
          {"budget",
           {{"max_dim", r.budget.max_dim},
            {"max_classes", r.budget.max_classes},
            {"max_rounds", r.budget.max_rounds}}},
          {"verified", r.verified ? Json(*r.verified) : Json(nullptr)},
          {"signatures_grow", r.signatures_grow()},
          {"classes", classes},
          {"trace", trace}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace dihedral
