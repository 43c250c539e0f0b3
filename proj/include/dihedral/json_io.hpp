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

// JSON forms of the public data types (nlohmann::json).

#include "json.hpp"

#include "dihedral/algebraic.hpp"
#include "dihedral/gf2.hpp"
#include "dihedral/iso.hpp"
#include "dihedral/klein.hpp"
#include "dihedral/modules.hpp"
#include "dihedral/quiver.hpp"
#include "dihedral/word.hpp"

namespace dihedral {

using Json = nlohmann::json;

// {"rows": n, "cols": m, "data": ["0110", ...]}
Json matrix_to_json(const BitMatrix& m);
BitMatrix matrix_from_json(const Json& j);

// {"q": 2, "x": <matrix>, "y": <matrix>}
Json rep_to_json(const Rep& m);
Rep rep_from_json(const Json& j);

// {"g1": <matrix>, "g2": <matrix>}
Json klein_rep_to_json(const KleinRep& m);
KleinRep klein_rep_from_json(const Json& j);

// Accepts "a b- a" or ["a", "b-", "a"]; emits the string form.
Word word_from_json(const Json& j);
Json word_to_json(const Word& w);

Json summand_to_json(const KleinSummand& s);
Json klein_decomposition_to_json(const KleinDecomposition& d);
Json signature_to_json(const Signature& s);
Json signature_result_to_json(const SignatureResult& s);
Json id_tag_to_json(const IdTag& t);
Json decomposition_to_json(const DecompositionReport& r, bool include_modules = false);
Json sweep_to_json(const SweepReport& r);
Json probe_to_json(const ProbeReport& r);

// Parses JSON text, mapping syntax errors to Error(kParseError).
Json parse_json(const std::string& text);

}  // namespace dihedral
