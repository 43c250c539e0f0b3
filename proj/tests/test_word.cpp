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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "dihedral/error.hpp"
#include "dihedral/word.hpp"

using namespace dihedral;

namespace {

const QParam q2(2);

Word w(const char* text) { return parse_word(text); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

// Independent membership test: scan for the four forbidden runs as text.
bool oracle_valid(const std::string& text, int q) {
  std::string ab, ba, ai, bi;
  for (int k = 0; k < q; ++k) {
    ab += "a b ";
    ba += "b a ";
    ai += "a- b- ";
    bi += "b- a- ";
  }
  const std::string padded = text + " ";
  for (const auto& pat : {ab, ba, ai, bi}) {
    for (std::size_t pos = padded.find(pat); pos != std::string::npos; pos = padded.find(pat, pos + 1)) {
      if (pos == 0 || padded[pos - 1] == ' ') return false;
    }
  }
  return true;
}

// The two additions of L at the start, tried blindly.
std::vector<Word> l_candidates(const Word& x, QParam q) {
  std::vector<Word> out;
  const Word a_inv_b = *concat(invert_word(block_a(q)), Word{kLetterB});
  const Word b_inv_a = *concat(invert_word(block_b(q)), Word{kLetterA});
  for (const Word& pre : {a_inv_b, b_inv_a}) {
    if (auto c = concat(pre, x); c && validate_word(*c, q)) out.push_back(*c);
  }
  return out;
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate_word(w("a b- a b a-"), q2));
  EXPECT_FALSE(validate_word(w("a b a b"), q2));
  EXPECT_TRUE(validate_word(Word{}, q2));
  EXPECT_TRUE(validate_word(w("a b a b"), QParam(4)));
}

TEST(Validate, AgreesWithTextScan) {
  for (int q : {2, 4}) {
    for (std::size_t len = 0; len <= 9; ++len) {
      for (const Word& x : enumerate_words(QParam(q), len, len, false)) {
        ASSERT_TRUE(oracle_valid(to_string(x), q)) << to_string(x);
      }
    }
  }
}

TEST(Enumerate, CountsMatchBruteForce) {
  for (std::size_t len = 0; len <= 8; ++len) {
    std::size_t brute = 0;
    for (unsigned code = 0; code < (1u << (2 * len)); ++code) {
      std::vector<Letter> letters;
      for (std::size_t i = 0; i < len; ++i) {
        const unsigned c = (code >> (2 * i)) & 3;
        letters.push_back({c & 1 ? Symbol::kB : Symbol::kA, (c & 2) != 0});
      }
      auto x = Word::try_make(letters);
      if (x && oracle_valid(to_string(*x), 2)) ++brute;
    }
    EXPECT_EQ(enumerate_words(q2, len, len, false).size(), brute) << len;
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(to_string(invert_word(w("a b- a b a-"))), "a b- a- b a-");
  EXPECT_TRUE(invert_word(Word{}).empty());
  EXPECT_EQ(to_string(invert_word(w("a"))), "a-");
}

TEST(Invert, InvolutionAndValidity) {
  for (const Word& x : enumerate_words(q2, 0, 9, false)) {
    ASSERT_EQ(invert_word(invert_word(x)), x);
    ASSERT_EQ(validate_word(invert_word(x), q2), validate_word(x, q2));
  }
}

TEST(Parse, RejectsCompactAndBrokenAlternation) {
  EXPECT_EQ(code_of([] { parse_word("aB-Ab"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_word("a a"); }), ErrorCode::kInvalidWord);
  EXPECT_EQ(to_string(parse_word("  a   b-  ")), "a b-");
}

TEST(ApplyL, Examples) {
  EXPECT_EQ(to_string(apply_l(w("a"), q2)), "a- b- a- b a");
  ASSERT_EQ(l_candidates(w("a"), q2).size(), 1u);
  EXPECT_EQ(l_candidates(w("a"), q2).front(), apply_l(w("a"), q2));
  EXPECT_EQ(to_string(apply_l(w("a b a b- a- b-"), q2)), "a- b-");
  EXPECT_EQ(code_of([] { apply_l(w("a b a"), q2); }), ErrorCode::kOperatorUndefined);
  EXPECT_TRUE(l_candidates(w("a b a"), q2).empty());
}

TEST(ApplyR, Examples) {
  EXPECT_EQ(to_string(apply_r(w("a"), q2)), "a b- a b a");
  EXPECT_EQ(to_string(apply_r(w("a b a b- a- b-"), q2)), "a b");
}

TEST(ApplyR, MirrorOfApplyL) {
  for (const Word& x : enumerate_words(q2, 0, 9, false)) {
    std::optional<Word> r, l;
    try {
      r = apply_r(x, q2);
    } catch (const Error&) {
    }
    try {
      l = invert_word(apply_l(invert_word(x), q2));
    } catch (const Error&) {
    }
    ASSERT_EQ(r, l) << to_string(x);
  }
}

TEST(ApplyL, InjectiveAndInvertible) {
  std::map<Word, Word> seen;
  for (const Word& x : enumerate_words(q2, 0, 9, false)) {
    Word y;
    try {
      y = apply_l(x, q2);
    } catch (const Error&) {
      continue;
    }
    ASSERT_TRUE(validate_word(y, q2));
    // A b- and B a- both reduce to the empty word.
    if (y.length() == 0) continue;
    auto [it, fresh] = seen.emplace(y, x);
    ASSERT_TRUE(fresh) << to_string(x) << " and " << to_string(it->second);
    ASSERT_EQ(apply_l_inverse(y, q2), x);
  }
}

TEST(Omega2, Example) {
  EXPECT_EQ(to_string(omega2_word(w("a"), q2)), "a- b- a- b a b- a b a");
  EXPECT_EQ(omega2_word(w("a"), q2).length(), 9u);
}

TEST(Omega2, OrderImmaterial) {
  std::size_t both = 0;
  for (const Word& x : enumerate_words(q2, 0, 7, false)) {
    try {
      const Word lr = apply_r(apply_l(x, q2), q2);
      const Word rl = apply_l(apply_r(x, q2), q2);
      ASSERT_EQ(lr, rl) << to_string(x);
      ++both;
    } catch (const Error& e) {
      // Only the empty word has two extensions.
      if (std::string(e.what()).ends_with("on ''")) {
        ASSERT_EQ(e.code(), ErrorCode::kAmbiguousOperator);
      } else {
        ASSERT_EQ(e.code(), ErrorCode::kOperatorUndefined) << to_string(x);
      }
    }
  }
  EXPECT_GT(both, 300u);
}

TEST(ArNeighbors, ProjectiveMiddle) {
  EXPECT_TRUE(ar_neighbors(w("a b a b- a- b-"), q2).has_projective_middle);
  EXPECT_TRUE(ar_neighbors(w("b a b a- b- a-"), q2).has_projective_middle);
  const ArNeighbors n = ar_neighbors(w("a"), q2);
  EXPECT_FALSE(n.has_projective_middle);
  EXPECT_EQ(to_string(n.left), "a- b- a- b a");
  EXPECT_EQ(to_string(n.right), "a b- a b a");
  EXPECT_EQ(n.translate, omega2_word(w("a"), q2));
}

TEST(ArNeighbors, DimensionBookkeeping) {
  for (const Word& x : enumerate_words(q2, 0, 7, false)) {
    ArNeighbors n;
    try {
      n = ar_neighbors(x, q2);
    } catch (const Error&) {
      continue;
    }
    const std::size_t lhs = n.left.length() + 1 + n.right.length() + 1 + (n.has_projective_middle ? 8 : 0);
    ASSERT_EQ(lhs, x.length() + 1 + n.translate.length() + 1) << to_string(x);
  }
}

TEST(Canonical, PicksLexicographicMinimum) {
  const Word x = w("a- b a");
  EXPECT_EQ(canonical(x), std::min(x, invert_word(x)));
  EXPECT_TRUE(is_canonical(canonical(x)));
  std::set<Word> classes;
  for (const Word& y : enumerate_words(q2, 3, 3, false)) classes.insert(canonical(y));
  EXPECT_EQ(classes.size(), enumerate_words(q2, 3, 3, true).size());
}
