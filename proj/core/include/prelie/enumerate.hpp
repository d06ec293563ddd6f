#pragma once

#include <vector>

#include "prelie/tree.hpp"

namespace prelie {

// Labeling regime for graded components. Multilinear: labels {1..n}, each
// exactly once. Alphabet(m): labels drawn from {1..m} with repetition.
struct LabelMode {
  enum class Kind { multilinear, alphabet };

  static LabelMode multilinear() { return {Kind::multilinear, 0}; }
  static LabelMode alphabet(int m) { return {Kind::alphabet, m}; }

  bool is_multilinear() const { return kind == Kind::multilinear; }

  bool operator==(const LabelMode&) const = default;

  Kind kind = Kind::multilinear;
  int alphabet_size = 0;
};

// All canonical degree-0 trees with n vertices, sorted, no duplicates.
// Multilinear count is n^(n-1) (Cayley); alphabet mode yields isomorphism
// classes of {1..m}-labeled rooted trees. Rejects n = 0.
std::vector<Tree> enumerate_trees(int n, const LabelMode& mode = LabelMode::multilinear());

// All canonical degree-1 trees with n ordinary vertices plus one special
// vertex, sorted. Multilinear count is (n+1)^n; n >= 0.
std::vector<Tree> enumerate_special_trees(int n, const LabelMode& mode = LabelMode::multilinear());

}  // namespace prelie
