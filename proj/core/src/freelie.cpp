#include "prelie/freelie.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "prelie/shuffle.hpp"

namespace prelie {

bool is_lyndon(const Word& w) {
  const auto& l = w.letters;
  if (l.empty()) return false;
  for (std::size_t start = 1; start < l.size(); ++start) {
    // plain lexicographic comparison against the proper suffix
    if (!std::lexicographical_compare(l.begin(), l.end(), l.begin() + start, l.end()))
      return false;
  }
  return true;
}

std::vector<Word> lyndon_words(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("lyndon_words requires m, n >= 1");
  std::vector<Word> out;
  std::vector<int> letters(n, 1);
  while (true) {
    Word w(letters);
    if (is_lyndon(w)) out.push_back(std::move(w));
    int pos = n - 1;
    while (pos >= 0 && ++letters[pos] > m) letters[pos--] = 1;
    if (pos < 0) break;
  }
  return out;  // odometer order is lexicographic already
}

std::vector<Word> multilinear_lyndon_words(int n) {
  if (n < 1) throw std::invalid_argument("multilinear Lyndon words require n >= 1");
  std::vector<int> letters(n);
  std::iota(letters.begin(), letters.end(), 1);
  std::vector<Word> out;
  do {
    Word w(letters);
    if (is_lyndon(w)) out.push_back(std::move(w));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

BracketExpr BracketExpr::leaf(int generator) {
  if (generator < 1) throw std::invalid_argument("generator labels start at 1");
  auto node = std::make_shared<Node>();
  node->generator = generator;
  return BracketExpr(std::move(node));
}

BracketExpr BracketExpr::pair(BracketExpr left, BracketExpr right) {
  auto node = std::make_shared<Node>();
  node->left = std::make_shared<BracketExpr>(std::move(left));
  node->right = std::make_shared<BracketExpr>(std::move(right));
  return BracketExpr(std::move(node));
}

Word BracketExpr::foliage() const {
  if (is_leaf()) return Word::letter(generator());
  return left().foliage() + right().foliage();
}

BracketExpr standard_bracketing(const Word& w) {
  if (!is_lyndon(w)) throw std::invalid_argument("standard_bracketing expects a Lyndon word");
  const auto& l = w.letters;
  if (l.size() == 1) return BracketExpr::leaf(l.front());
  for (std::size_t start = 1; start < l.size(); ++start) {
    Word suffix(std::vector<int>(l.begin() + start, l.end()));
    if (is_lyndon(suffix)) {
      Word prefix(std::vector<int>(l.begin(), l.begin() + start));
      return BracketExpr::pair(standard_bracketing(prefix), standard_bracketing(suffix));
    }
  }
  throw std::logic_error("Lyndon word without a Lyndon proper suffix");
}

TreeVector eval_in_prelie(const BracketExpr& e) {
  if (e.is_leaf()) return tree_vector(Tree::leaf(e.generator()));
  return bracket(eval_in_prelie(e.left()), eval_in_prelie(e.right()));
}

TensorVector eval_in_tensor(const BracketExpr& e) {
  if (e.is_leaf()) return TensorVector::single(Word::letter(e.generator()));
  TensorVector l = eval_in_tensor(e.left());
  TensorVector r = eval_in_tensor(e.right());
  return concat(l, r) - concat(r, l);
}

namespace {

int moebius(int d) {
  int result = 1;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) return 0;
      result = -result;
    }
  }
  if (d > 1) result = -result;
  return result;
}

std::int64_t int_pow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

std::int64_t witt_dimension(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("witt_dimension requires m, n >= 1");
  std::int64_t sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    sum += moebius(d) * int_pow(m, n / d);
  }
  return sum / n;
}

TreeVector xi_element(int u, int v, int w) {
  auto chain = [](int a, int b, int c) { return Tree(a, {Tree(b, {Tree::leaf(c)})}); };
  auto cherry = [](int a, int b, int c) { return Tree(a, {Tree::leaf(b), Tree::leaf(c)}); };
  TreeVector xi;
  xi.add(chain(u, v, w), 1);
  xi.add(chain(u, w, v), -1);
  xi.add(chain(v, w, u), -1);
  xi.add(chain(w, v, u), 1);
  xi.add(cherry(v, u, w), -1);
  xi.add(cherry(w, u, v), 1);
  return xi;
}

}  // namespace prelie
