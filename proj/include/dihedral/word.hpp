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

// Words in a, b and their inverses: the combinatorial index of string
// modules, together with the operators that move along the stable
// Auslander-Reiten quiver at the word level.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace dihedral {

// Parameter q of the dihedral group <x, y | x^2 = y^2 = (xy)^{2q} = 1> of
// order 4q. Always a power of two, at least 2.
class QParam {
 public:
  explicit QParam(int q);
  int value() const { return q_; }
  int group_order() const { return 4 * q_; }
  friend bool operator==(QParam, QParam) = default;

 private:
  int q_;
};

enum class Symbol : std::uint8_t { kA = 0, kB = 1 };

struct Letter {
  Symbol symbol = Symbol::kA;
  bool inverse = false;

  Letter inverted() const { return {symbol, !inverse}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline constexpr Letter kLetterA{Symbol::kA, false};
inline constexpr Letter kLetterAInv{Symbol::kA, true};
inline constexpr Letter kLetterB{Symbol::kB, false};
inline constexpr Letter kLetterBInv{Symbol::kB, true};

// A finite sequence of letters whose symbols alternate between a and b.
class Word {
 public:
  Word() = default;
  // Throws Error(kInvalidWord) if the letters do not alternate.
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  static std::optional<Word> try_make(std::vector<Letter> letters);

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }

  bool starts_with(const Word& prefix) const;
  bool ends_with(const Word& suffix) const;
  Word drop_front(std::size_t n) const;
  Word drop_back(std::size_t n) const;

  std::size_t count(Symbol s) const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Concatenation; empty if the junction breaks alternation.
std::optional<Word> concat(const Word& left, const Word& right);

// Text form: whitespace-separated tokens a, b, a-, b-.
Word parse_word(const std::string& text);
std::string to_string(const Word& w);
std::string to_string(Letter l);

// True iff w has no run of 2q consecutive direct letters and no run of 2q
// consecutive inverse letters, i.e. avoids (ab)^q, (ba)^q, (a-b-)^q, (b-a-)^q.
bool validate_word(const Word& w, QParam q);

Word invert_word(const Word& w);

// Lexicographic minimum of w and its inverse.
Word canonical(const Word& w);
bool is_canonical(const Word& w);

// The blocks A = (ab)^{q-1} a and B = (ba)^{q-1} b.
Word block_a(QParam q);
Word block_b(QParam q);

Word apply_l(const Word& w, QParam q);
Word apply_r(const Word& w, QParam q);
// Inverses of apply_l / apply_r: the unique u with apply_l(u) == w.
Word apply_l_inverse(const Word& w, QParam q);
Word apply_r_inverse(const Word& w, QParam q);

// w L_q R_q.
Word omega2_word(const Word& w, QParam q);

struct ArNeighbors {
  Word left;       // w L_q
  Word right;      // w R_q
  Word translate;  // w L_q R_q
  bool has_projective_middle = false;
};
ArNeighbors ar_neighbors(const Word& w, QParam q);

// Every word of W_q with length in [min_len, max_len], in length-then-
// lexicographic order. With canonical_only, one representative per {w, w^-1}.
std::vector<Word> enumerate_words(QParam q, std::size_t min_len, std::size_t max_len,
                                  bool canonical_only);

// Calls visit for every word of W_q of exactly the given length, stopping
// early when visit returns false. Returns the number of words visited.
std::size_t for_each_word(QParam q, std::size_t length,
                          const std::function<bool(const Word&)>& visit);

}  // namespace dihedral
