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

#include "dihedral/poly2.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "dihedral/error.hpp"

namespace dihedral {

Poly2 Poly2::monomial(std::size_t degree) {
  Poly2 p;
  p.set_coeff(degree, true);
  return p;
}

Poly2 Poly2::constant(bool c) {
  Poly2 p;
  if (c) p.words_.push_back(1);
  return p;
}

Poly2 Poly2::from_bits(std::vector<Word64> words) {
  Poly2 p;
  p.words_ = std::move(words);
  p.trim();
  return p;
}

Poly2 Poly2::parse(const std::string& text) {
  Poly2 p;
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty() || s == "0") return p;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = std::min(s.find('+', pos), s.size());
    const std::string term = s.substr(pos, next - pos);
    std::size_t deg = 0;
    if (term == "1") {
      deg = 0;
    } else if (term == "t") {
      deg = 1;
    } else if (term.rfind("t^", 0) == 0 && term.size() > 2 &&
               std::all_of(term.begin() + 2, term.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      deg = std::stoul(term.substr(2));
    } else {
      throw Error(ErrorCode::kParseError, "bad polynomial term '" + term + "'");
    }
    p.set_coeff(deg, !p.coeff(deg));
    if (next == s.size()) break;
    pos = next + 1;
  }
  return p;
}

long Poly2::degree() const {
  if (words_.empty()) return -1;
  const Word64 top = words_.back();
  return static_cast<long>(words_.size() - 1) * 64 + (63 - std::countl_zero(top));
}

bool Poly2::coeff(std::size_t i) const {
  const std::size_t w = i >> 6;
  return w < words_.size() && ((words_[w] >> (i & 63)) & 1U);
}

void Poly2::set_coeff(std::size_t i, bool value) {
  const std::size_t w = i >> 6;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const Word64 mask = Word64{1} << (i & 63);
  words_[w] = value ? (words_[w] | mask) : (words_[w] & ~mask);
  trim();
}

void Poly2::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::string Poly2::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = 0; i <= degree(); ++i) {
    if (!coeff(static_cast<std::size_t>(i))) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "t";
    } else {
      out += "t^" + std::to_string(i);
    }
  }
  return out;
}

bool operator<(const Poly2& a, const Poly2& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
  }
  return false;
}

Poly2& Poly2::operator+=(const Poly2& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  Poly2 c = a;
  c += b;
  return c;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Word64> out(a.words_.size() + b.words_.size(), 0);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    Word64 bits = a.words_[i];
    while (bits != 0) {
      const int s = std::countr_zero(bits);
      bits &= bits - 1;
      // add b shifted by 64*i + s
      for (std::size_t j = 0; j < b.words_.size(); ++j) {
        const Word64 w = b.words_[j];
        out[i + j] ^= w << s;
        if (s != 0) out[i + j + 1] ^= w >> (64 - s);
      }
    }
  }
  return Poly2::from_bits(std::move(out));
}

std::pair<Poly2, Poly2> Poly2::divmod(const Poly2& d) const {
  if (d.is_zero()) throw Error(ErrorCode::kInvalidArgument, "polynomial division by zero");
  Poly2 q;
  Poly2 r = *this;
  const long dd = d.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - dd);
    q.set_coeff(shift, !q.coeff(shift));
    r += d * Poly2::monomial(shift);
  }
  return {q, r};
}

BitMatrix Poly2::evaluate(const BitMatrix& m) const {
  // Horner's rule.
  BitMatrix acc(m.rows(), m.cols());
  const BitMatrix id = BitMatrix::identity(m.rows());
  for (long i = degree(); i >= 0; --i) {
    acc = acc * m;
    if (coeff(static_cast<std::size_t>(i))) acc += id;
  }
  return acc;
}

Poly2 gcd(Poly2 a, Poly2 b) {
  while (!b.is_zero()) {
    Poly2 r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::pair<Poly2, std::size_t>> factor(const Poly2& f) {
  std::vector<std::pair<Poly2, std::size_t>> out;
  if (f.degree() < 1) return out;
  Poly2 rest = f;
  for (std::size_t d = 1; static_cast<long>(2 * d) <= rest.degree(); ++d) {
    // Candidates of degree d in increasing order; composites never divide
    // because their smaller factors were removed first.
    for (Word64 low = 0; low < (Word64{1} << d); ++low) {
      Poly2 cand = Poly2::from_bits({low | (Word64{1} << d)});
      if (!cand.coeff(0)) {
        if (d != 1) continue;  // t is the only irreducible with zero constant term
      }
      std::size_t mult = 0;
      while (true) {
        auto [q, r] = rest.divmod(cand);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++mult;
      }
      if (mult > 0) out.emplace_back(cand, mult);
      if (static_cast<long>(2 * d) > rest.degree()) break;
    }
  }
  if (rest.degree() >= 1) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == rest; });
    if (it != out.end()) {
      ++it->second;
    } else {
      out.emplace_back(rest, 1);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool is_irreducible(const Poly2& f) {
  const auto fs = factor(f);
  return fs.size() == 1 && fs.front().second == 1;
}

Poly2 min_poly(const BitMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "min_poly: matrix not square");
  struct Row {
    std::vector<Word64> vec;
    Poly2 combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  BitMatrix power = BitMatrix::identity(m.rows());
  for (std::size_t k = 0;; ++k) {
    std::vector<Word64> v = flatten(power);
    Poly2 combo = Poly2::monomial(k);
    for (const Row& r : rows) {
      if ((v[r.pivot >> 6] >> (r.pivot & 63)) & 1U) {
        for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= r.vec[w];
        combo += r.combo;
      }
    }
    std::size_t pivot = v.size() * 64;
    for (std::size_t w = 0; w < v.size(); ++w) {
      if (v[w] != 0) {
        pivot = w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
        break;
      }
    }
    if (pivot == v.size() * 64) return combo;
    rows.push_back({std::move(v), std::move(combo), pivot});
    power = power * m;
  }
}

PolyMatrix linear_pencil(const BitMatrix& constant_part, const BitMatrix& linear_part) {
  PolyMatrix p(constant_part.rows(), std::vector<Poly2>(constant_part.cols()));
  for (std::size_t i = 0; i < constant_part.rows(); ++i) {
    for (std::size_t j = 0; j < constant_part.cols(); ++j) {
      Word64 bits = 0;
      if (constant_part.get(i, j)) bits |= 1;
      if (linear_part.get(i, j)) bits |= 2;
      if (bits != 0) p[i][j] = Poly2::from_bits({bits});
    }
  }
  return p;
}

std::vector<Poly2> smith_invariant_factors(PolyMatrix m) {
  std::vector<Poly2> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring a minimal-degree entry to (t, t).
    auto move_min_to_pivot = [&]() -> bool {
      long best = -1;
      std::size_t bi = 0;
      std::size_t bj = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          const long d = m[i][j].degree();
          if (d >= 0 && (best < 0 || d < best)) {
            best = d;
            bi = i;
            bj = j;
          }
        }
      }
      if (best < 0) return false;
      std::swap(m[t], m[bi]);
      for (auto& r : m) std::swap(r[t], r[bj]);
      return true;
    };
    if (!move_min_to_pivot()) break;
    while (true) {
      bool dirty = false;
      const Poly2 pivot = m[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t].is_zero()) continue;
        const Poly2 q = m[i][t] / pivot;
        for (std::size_t j = t; j < cols; ++j) {
          if (!m[t][j].is_zero()) m[i][j] += q * m[t][j];
        }
        if (!m[i][t].is_zero()) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j].is_zero()) continue;
        const Poly2 q = m[t][j] / pivot;
        for (std::size_t i = t; i < rows; ++i) {
          if (!m[i][t].is_zero()) m[i][j] += q * m[i][t];
        }
        if (!m[t][j].is_zero()) dirty = true;
      }
      if (dirty) {
        // Some remainder has smaller degree than the pivot; restart from it.
        long best = m[t][t].degree();
        std::size_t bi = t;
        std::size_t bj = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          const long d = m[i][t].degree();
          if (d >= 0 && d < best) {
            best = d;
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          const long d = m[t][j].degree();
          if (d >= 0 && d < best) {
            best = d;
            bi = t;
            bj = j;
          }
        }
        std::swap(m[t], m[bi]);
        for (auto& r : m) std::swap(r[t], r[bj]);
        continue;
      }
      // Row and column are clear; the pivot must divide the remaining block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!m[i][j].is_zero() && !(m[i][j] % m[t][t]).is_zero()) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    diag.push_back(m[t][t]);
  }
  return diag;
}

}  // namespace dihedral
