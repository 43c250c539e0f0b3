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

// Polynomials over the two-element field and the polynomial-matrix routines
// built on them (minimal polynomials, Smith invariant factors).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dihedral/gf2.hpp"

namespace dihedral {

class Poly2 {
 public:
  Poly2() = default;
  // Bit i of the packed words is the coefficient of t^i.
  static Poly2 monomial(std::size_t degree);
  static Poly2 constant(bool c);
  static Poly2 from_bits(std::vector<Word64> words);
  // Accepts the "1+t+t^2" form produced by to_string().
  static Poly2 parse(const std::string& text);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  // Degree of the zero polynomial is reported as -1.
  long degree() const;
  bool coeff(std::size_t i) const;
  void set_coeff(std::size_t i, bool value);
  const std::vector<Word64>& words() const { return words_; }

  std::string to_string() const;

  friend bool operator==(const Poly2&, const Poly2&) = default;
  friend bool operator<(const Poly2& a, const Poly2& b);
  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2& operator+=(const Poly2& other);

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Poly2, Poly2> divmod(const Poly2& d) const;
  Poly2 operator%(const Poly2& d) const { return divmod(d).second; }
  Poly2 operator/(const Poly2& d) const { return divmod(d).first; }

  BitMatrix evaluate(const BitMatrix& m) const;

 private:
  void trim();
  std::vector<Word64> words_;
};

Poly2 gcd(Poly2 a, Poly2 b);

// Factorization into irreducible powers, ascending by (degree, bits).
std::vector<std::pair<Poly2, std::size_t>> factor(const Poly2& f);
bool is_irreducible(const Poly2& f);

// Monic least-degree polynomial annihilating a square matrix.
Poly2 min_poly(const BitMatrix& m);

using PolyMatrix = std::vector<std::vector<Poly2>>;

// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form over
// GF(2)[t]; their count is the rank over the rational function field.
std::vector<Poly2> smith_invariant_factors(PolyMatrix m);

// The pencil u + t*v as a polynomial matrix.
PolyMatrix linear_pencil(const BitMatrix& constant_part, const BitMatrix& linear_part);

}  // namespace dihedral
