#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "prelie/grafting.hpp"
#include "prelie/word.hpp"

namespace prelie {

// Strictly smaller than every proper suffix.
bool is_lyndon(const Word& w);

// All Lyndon words of length n over {1..m}, lexicographic order.
std::vector<Word> lyndon_words(int m, int n);

// Lyndon words using each of the letters {1..n} exactly once; there are
// (n-1)! of them and their bracketings span the multilinear free Lie part.
std::vector<Word> multilinear_lyndon_words(int n);

// Binary bracketing with generator leaves.
class BracketExpr {
 public:
  static BracketExpr leaf(int generator);
  static BracketExpr pair(BracketExpr left, BracketExpr right);

  bool is_leaf() const { return node_->left == nullptr; }
  int generator() const { return node_->generator; }
  const BracketExpr& left() const { return *node_->left; }
  const BracketExpr& right() const { return *node_->right; }

  // Leaves spelled left to right.
  Word foliage() const;

 private:
  struct Node {
    int generator = 0;
    std::shared_ptr<BracketExpr> left;
    std::shared_ptr<BracketExpr> right;
  };
  explicit BracketExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Standard bracketing of a Lyndon word: split at the longest proper Lyndon
// suffix and recurse. Non-Lyndon input is an error.
BracketExpr standard_bracketing(const Word& w);

// Leaves become single-vertex trees, brackets the pre-Lie commutator.
TreeVector eval_in_prelie(const BracketExpr& e);

// Leaves become letters, brackets the concatenation commutator.
TensorVector eval_in_tensor(const BracketExpr& e);

// (1/n) sum over d | n of mu(d) m^(n/d): the dimension of the degree-n part
// of the free Lie algebra on m generators.
std::int64_t witt_dimension(int m, int n);

// The explicit six-term kernel element
//   u(v(w)) - u(w(v)) - v(w(u)) + w(v(u)) - v(u,w) + w(u,v),
// equal to the evaluated bracket [u,[v,w]].
TreeVector xi_element(int u, int v, int w);

}  // namespace prelie
