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

#include "dihedral/word.hpp"

#include <algorithm>
#include <sstream>

#include "dihedral/error.hpp"

namespace dihedral {

QParam::QParam(int q) : q_(q) {
  if (q < 2 || (q & (q - 1)) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "q must be a power of two and at least 2, got " + std::to_string(q));
  }
}

namespace {

bool alternates(const std::vector<Letter>& letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i].symbol == letters[i - 1].symbol) return false;
  }
  return true;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (!alternates(letters_)) {
    throw Error(ErrorCode::kInvalidWord, "letters do not alternate between a and b");
  }
}

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

std::optional<Word> Word::try_make(std::vector<Letter> letters) {
  if (!alternates(letters)) return std::nullopt;
  return Word(std::move(letters));
}

bool Word::starts_with(const Word& prefix) const {
  return prefix.length() <= length() &&
         std::equal(prefix.letters_.begin(), prefix.letters_.end(), letters_.begin());
}

bool Word::ends_with(const Word& suffix) const {
  return suffix.length() <= length() &&
         std::equal(suffix.letters_.begin(), suffix.letters_.end(),
                    letters_.end() - static_cast<std::ptrdiff_t>(suffix.length()));
}

Word Word::drop_front(std::size_t n) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(n), letters_.end()));
}

Word Word::drop_back(std::size_t n) const {
  return Word(std::vector<Letter>(letters_.begin(), letters_.end() - static_cast<std::ptrdiff_t>(n)));
}

std::size_t Word::count(Symbol s) const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [s](const Letter& l) { return l.symbol == s; }));
}

std::optional<Word> concat(const Word& left, const Word& right) {
  std::vector<Letter> letters = left.letters();
  letters.insert(letters.end(), right.letters().begin(), right.letters().end());
  return Word::try_make(std::move(letters));
}

std::string to_string(Letter l) {
  std::string s(1, l.symbol == Symbol::kA ? 'a' : 'b');
  if (l.inverse) s.push_back('-');
  return s;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i != 0) out.push_back(' ');
    out += to_string(w[i]);
  }
  return out;
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    if (tok == "a") {
      letters.push_back(kLetterA);
    } else if (tok == "a-") {
      letters.push_back(kLetterAInv);
    } else if (tok == "b") {
      letters.push_back(kLetterB);
    } else if (tok == "b-") {
      letters.push_back(kLetterBInv);
    } else {
      throw Error(ErrorCode::kParseError,
                  "unknown letter token '" + tok + "' (expected a, b, a-, b- separated by spaces)");
    }
  }
  auto w = Word::try_make(std::move(letters));
  if (!w) throw Error(ErrorCode::kInvalidWord, "'" + text + "' does not alternate between a and b");
  return *w;
}

bool validate_word(const Word& w, QParam q) {
  const std::size_t limit = 2 * static_cast<std::size_t>(q.value());
  std::size_t run = 0;
  for (std::size_t i = 0; i < w.length(); ++i) {
    run = (i > 0 && w[i].inverse == w[i - 1].inverse) ? run + 1 : 1;
    if (run >= limit) return false;
  }
  return true;
}

Word invert_word(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (std::size_t i = w.length(); i-- > 0;) letters.push_back(w[i].inverted());
  return Word(std::move(letters));
}

Word canonical(const Word& w) { return std::min(w, invert_word(w)); }

bool is_canonical(const Word& w) { return !(invert_word(w) < w); }

Word block_a(QParam q) {
  std::vector<Letter> letters;
  for (int i = 0; i < 2 * q.value() - 1; ++i) letters.push_back(i % 2 == 0 ? kLetterA : kLetterB);
  return Word(std::move(letters));
}

Word block_b(QParam q) {
  std::vector<Letter> letters;
  for (int i = 0; i < 2 * q.value() - 1; ++i) letters.push_back(i % 2 == 0 ? kLetterB : kLetterA);
  return Word(std::move(letters));
}

namespace {

Word join(const Word& left, Letter l) {
  std::vector<Letter> letters = left.letters();
  letters.push_back(l);
  return Word(std::move(letters));
}

Word join(Letter l, const Word& right) {
  std::vector<Letter> letters{l};
  letters.insert(letters.end(), right.letters().begin(), right.letters().end());
  return Word(std::move(letters));
}

// Prefixes removed by L: A b^-1 and B a^-1. Prefixes added by L: A^-1 b and B^-1 a.
struct Hooks {
  Word remove_1, remove_2, add_1, add_2;
};

Hooks left_hooks(QParam q) {
  const Word a = block_a(q);
  const Word b = block_b(q);
  return {join(a, kLetterBInv), join(b, kLetterAInv), join(invert_word(a), kLetterB),
          join(invert_word(b), kLetterA)};
}

// Suffixes removed by R: a B^-1 and b A^-1. Suffixes added by R: a^-1 B and b^-1 A.
Hooks right_hooks(QParam q) {
  const Word a = block_a(q);
  const Word b = block_b(q);
  return {join(kLetterA, invert_word(b)), join(kLetterB, invert_word(a)), join(kLetterAInv, b),
          join(kLetterBInv, a)};
}

Word pick_unique(std::vector<Word> candidates, const Word& w, const char* op) {
  if (candidates.size() == 1) return candidates.front();
  if (candidates.empty()) {
    throw Error(ErrorCode::kOperatorUndefined,
                std::string(op) + " is undefined on '" + to_string(w) + "'");
  }
  throw Error(ErrorCode::kAmbiguousOperator,
              std::string(op) + " has " + std::to_string(candidates.size()) +
                  " valid results on '" + to_string(w) + "'");
}

void keep_if_valid(std::vector<Word>& out, const std::optional<Word>& cand, QParam q) {
  if (cand && validate_word(*cand, q)) out.push_back(*cand);
}

}  // namespace

Word apply_l(const Word& w, QParam q) {
  const Hooks h = left_hooks(q);
  if (w.starts_with(h.remove_1)) return w.drop_front(h.remove_1.length());
  if (w.starts_with(h.remove_2)) return w.drop_front(h.remove_2.length());
  std::vector<Word> cands;
  keep_if_valid(cands, concat(h.add_1, w), q);
  keep_if_valid(cands, concat(h.add_2, w), q);
  return pick_unique(std::move(cands), w, "L");
}

Word apply_r(const Word& w, QParam q) {
  const Hooks h = right_hooks(q);
  if (w.ends_with(h.remove_1)) return w.drop_back(h.remove_1.length());
  if (w.ends_with(h.remove_2)) return w.drop_back(h.remove_2.length());
  std::vector<Word> cands;
  keep_if_valid(cands, concat(w, h.add_1), q);
  keep_if_valid(cands, concat(w, h.add_2), q);
  return pick_unique(std::move(cands), w, "R");
}

namespace {

template <typename Forward>
Word invert_operator(const Word& w, QParam q, const std::vector<std::optional<Word>>& raw,
                     Forward forward, const char* op) {
  std::vector<Word> cands;
  for (const auto& c : raw) {
    if (!c || !validate_word(*c, q)) continue;
    try {
      if (forward(*c, q) == w && std::find(cands.begin(), cands.end(), *c) == cands.end()) {
        cands.push_back(*c);
      }
    } catch (const Error&) {
    }
  }
  return pick_unique(std::move(cands), w, op);
}

}  // namespace

Word apply_l_inverse(const Word& w, QParam q) {
  const Hooks h = left_hooks(q);
  std::vector<std::optional<Word>> raw;
  if (w.starts_with(h.add_1)) raw.emplace_back(w.drop_front(h.add_1.length()));
  if (w.starts_with(h.add_2)) raw.emplace_back(w.drop_front(h.add_2.length()));
  raw.push_back(concat(h.remove_1, w));
  raw.push_back(concat(h.remove_2, w));
  return invert_operator(w, q, raw, apply_l, "L^-1");
}

Word apply_r_inverse(const Word& w, QParam q) {
  const Hooks h = right_hooks(q);
  std::vector<std::optional<Word>> raw;
  if (w.ends_with(h.add_1)) raw.emplace_back(w.drop_back(h.add_1.length()));
  if (w.ends_with(h.add_2)) raw.emplace_back(w.drop_back(h.add_2.length()));
  raw.push_back(concat(w, h.remove_1));
  raw.push_back(concat(w, h.remove_2));
  return invert_operator(w, q, raw, apply_r, "R^-1");
}

Word omega2_word(const Word& w, QParam q) { return apply_r(apply_l(w, q), q); }

ArNeighbors ar_neighbors(const Word& w, QParam q) {
  ArNeighbors out;
  out.left = apply_l(w, q);
  out.right = apply_r(w, q);
  out.translate = apply_r(out.left, q);
  const Word ab = *concat(block_a(q), invert_word(block_b(q)));
  out.has_projective_middle = (w == ab) || (w == invert_word(ab));
  return out;
}

std::size_t for_each_word(QParam q, std::size_t length,
                          const std::function<bool(const Word&)>& visit) {
  if (length == 0) {
    visit(Word());
    return 1;
  }
  const std::size_t limit = 2 * static_cast<std::size_t>(q.value());
  std::vector<Letter> cur;
  cur.reserve(length);
  std::size_t visited = 0;
  bool stop = false;
  // run = length of the current run of equal inverse flags ending at the top.
  std::function<void(std::size_t)> rec = [&](std::size_t run) {
    if (stop) return;
    if (cur.size() == length) {
      ++visited;
      if (!visit(Word(cur))) stop = true;
      return;
    }
    const Symbol next = cur.back().symbol == Symbol::kA ? Symbol::kB : Symbol::kA;
    for (bool inv : {false, true}) {
      const std::size_t r = (inv == cur.back().inverse) ? run + 1 : 1;
      if (r >= limit) continue;
      cur.push_back({next, inv});
      rec(r);
      cur.pop_back();
      if (stop) return;
    }
  };
  for (Letter first : {kLetterA, kLetterAInv, kLetterB, kLetterBInv}) {
    cur.assign(1, first);
    rec(1);
    if (stop) break;
  }
  return visited;
}

std::vector<Word> enumerate_words(QParam q, std::size_t min_len, std::size_t max_len,
                                  bool canonical_only) {
  std::vector<Word> out;
  for (std::size_t len = min_len; len <= max_len; ++len) {
    for_each_word(q, len, [&](const Word& w) {
      if (!canonical_only || is_canonical(w)) out.push_back(w);
      return true;
    });
  }
  return out;
}

}  // namespace dihedral
