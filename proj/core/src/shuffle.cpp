#include "prelie/shuffle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace prelie {

std::string render_word(const Word& w) {
  if (w.is_unit()) return "e";
  bool single_digit = std::all_of(w.letters.begin(), w.letters.end(),
                                  [](int l) { return l >= 1 && l <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (!single_digit && i > 0) out += '.';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

std::string render_word_pair(const WordPair& p) {
  return render_word(p.left) + "|" + render_word(p.right);
}

TensorVector concat(const TensorVector& a, const TensorVector& b) {
  TensorVector result;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) result.add(wa + wb, ca * cb);
  return result;
}

PairVector coproduct(const Word& w) {
  const int n = w.length();
  if (n > 20) throw std::invalid_argument("word too long for coproduct");
  PairVector result;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Word left, right;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i))
        left.letters.push_back(w.letters[i]);
      else
        right.letters.push_back(w.letters[i]);
    }
    result.add(WordPair{std::move(left), std::move(right)}, 1);
  }
  return result;
}

PairVector coproduct(const TensorVector& x) {
  PairVector result;
  for (const auto& [w, c] : x) result += c * coproduct(w);
  return result;
}

PairVector reduced_coproduct(const TensorVector& x) {
  if (x.coefficient(Word::unit()) != 0)
    throw std::invalid_argument("reduced_coproduct expects no unit component");
  PairVector result;
  for (const auto& [w, c] : x) {
    PairVector full = coproduct(w);
    full.add(WordPair{Word::unit(), w}, -1);
    full.add(WordPair{w, Word::unit()}, -1);
    result += c * full;
  }
  return result;
}

PairVector pair_concat(const PairVector& a, const PairVector& b) {
  PairVector result;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b)
      result.add(WordPair{pa.left + pb.left, pa.right + pb.right}, ca * cb);
  return result;
}

PairVector act_left(const TensorVector& x, const PairVector& xi) {
  return pair_concat(coproduct(x), xi);
}

PairVector act_right(const PairVector& xi, const TensorVector& x) {
  PairVector mixer;
  for (const auto& [w, c] : x) {
    mixer.add(WordPair{Word::unit(), w}, c);
    mixer.add(WordPair{w, Word::unit()}, c);
  }
  return pair_concat(xi, mixer);
}

PairVector r_form(const TensorVector& x, const TensorVector& y) {
  PairVector result;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) {
      result.add(WordPair{wx, wy}, cx * cy);
      result.add(WordPair{wy, wx}, cx * cy);
    }
  return result;
}

std::vector<Word> word_component(int n, const LabelMode& mode) {
  if (n < 1) throw std::invalid_argument("word component requires n >= 1");
  std::vector<Word> words;
  if (mode.is_multilinear()) {
    std::vector<int> letters(n);
    for (int i = 0; i < n; ++i) letters[i] = i + 1;
    do {
      words.push_back(Word(letters));
    } while (std::next_permutation(letters.begin(), letters.end()));
  } else {
    const int m = mode.alphabet_size;
    if (m < 1) throw std::invalid_argument("alphabet size must be >= 1");
    std::vector<int> letters(n, 1);
    while (true) {
      words.push_back(Word(letters));
      int pos = n - 1;
      while (pos >= 0 && ++letters[pos] > m) letters[pos--] = 1;
      if (pos < 0) break;
    }
  }
  std::sort(words.begin(), words.end());
  return words;
}

SubspaceBasis<Word> primitive_basis(int n, const LabelMode& mode) {
  std::vector<Word> words = word_component(n, mode);
  // rows: every pair occurring in some image, in key order
  std::vector<PairVector> images;
  images.reserve(words.size());
  std::set<WordPair> seen;
  for (const Word& w : words) {
    images.push_back(reduced_coproduct(TensorVector::single(w)));
    for (const auto& [pair, coeff] : images.back()) seen.insert(pair);
  }
  std::vector<WordPair> row_keys(seen.begin(), seen.end());
  std::map<WordPair, int> row_index;
  for (std::size_t i = 0; i < row_keys.size(); ++i) row_index.emplace(row_keys[i], i);

  SparseMatrix<WordPair, Word> m;
  m.row_keys = std::move(row_keys);
  m.col_keys = words;
  m.columns.resize(words.size());
  for (std::size_t j = 0; j < words.size(); ++j)
    for (const auto& [pair, coeff] : images[j])
      m.columns[j].emplace_back(row_index.at(pair), coeff);
  return kernel_basis(m);
}

}  // namespace prelie
