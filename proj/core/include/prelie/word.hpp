#pragma once

#include <compare>
#include <string>
#include <vector>

#include "prelie/basis_vector.hpp"

namespace prelie {

// Tensor-algebra basis word; the empty word is the unit. Ordered by length
// first, then lexicographically, so graded components stay contiguous.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  static Word unit() { return Word{}; }
  static Word letter(int generator) { return Word({generator}); }

  bool is_unit() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }

  std::strong_ordering operator<=>(const Word& other) const {
    if (letters.size() != other.letters.size()) return letters.size() <=> other.letters.size();
    return letters <=> other.letters;
  }
  bool operator==(const Word& other) const { return letters == other.letters; }

  friend Word operator+(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
  }
};

// "e" for the unit; letters juxtaposed when single-digit, dot-separated
// otherwise.
std::string render_word(const Word& w);

// Ordered pair of words: basis key of T(V) (x) T(V).
struct WordPair {
  Word left;
  Word right;

  auto operator<=>(const WordPair&) const = default;
};

std::string render_word_pair(const WordPair& p);

using TensorVector = BasisVector<Word>;
using PairVector = BasisVector<WordPair>;

}  // namespace prelie
