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

#include "dihedral/gf2.hpp"

namespace dihedral::fixtures {

// alpha and beta of M(a b- a b a-) exactly as printed.
inline BitMatrix reference_x() {
  return BitMatrix::from_strings({"100000", "110000", "001000", "001100", "000011", "000001"}, 6);
}
inline BitMatrix reference_y() {
  return BitMatrix::from_strings({"100000", "011000", "001000", "000100", "000110", "000001"}, 6);
}

}  // namespace dihedral::fixtures
