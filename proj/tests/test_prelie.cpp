#include <algorithm>
#include <random>

#include "doctest.h"
#include "prelie/enumerate.hpp"
#include "prelie/grafting.hpp"

using namespace prelie;

namespace {

TreeVector tv(const char* expr) { return tree_vector(parse_tree(expr)); }

// Guin-Oudom recursion, the independent route to the symmetric brace.
TreeVector brace_by_recursion(const TreeVector& x, std::vector<TreeVector> args) {
  if (args.empty()) return x;
  TreeVector last = std::move(args.back());
  args.pop_back();
  TreeVector result = star(brace_by_recursion(x, args), last);
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::vector<TreeVector> corrected = args;
    corrected[i] = star(args[i], last);
    result -= brace_by_recursion(x, corrected);
  }
  return result;
}

}  // namespace

TEST_CASE("star on single trees") {
  CHECK(star(tv("1"), tv("2")) == tv("1(2)"));
  CHECK(star(tv("1(2)"), tv("3")) == tv("1(2,3)") + tv("1(2(3))"));
  CHECK(star(tv("@"), tv("1")) == tv("@(1)"));
}

TEST_CASE("star expands into vertex-count many terms") {
  for (int n = 1; n <= 4; ++n)
    for (const Tree& t : enumerate_trees(n, LabelMode::multilinear())) {
      TreeVector product = star(tree_vector(t), tv("9"));
      Rational total = 0;
      for (const auto& [tree, coeff] : product) total += coeff;
      CHECK(total == t.vertex_count());
    }
}

TEST_CASE("star degree bookkeeping") {
  CHECK(homogeneous_degree(star(tv("@"), tv("1"))) == 1);
  CHECK_THROWS_AS(star(tv("@"), tv("@")), std::invalid_argument);
  CHECK(star(TreeVector{}, tv("1")).is_zero());
  TreeVector mixed = tv("1") + tv("@");
  CHECK_THROWS_AS(homogeneous_degree(mixed), std::invalid_argument);
}

TEST_CASE("brace examples") {
  CHECK(brace(tv("1"), {tv("2"), tv("3")}) == tv("1(2,3)"));
  CHECK(brace(tv("1"), {tv("2"), tv("3")}) ==
        star(star(tv("1"), tv("2")), tv("3")) - star(tv("1"), star(tv("2"), tv("3"))));

  // a single special root collects its arguments as child subtrees
  CHECK(brace(tv("@"), {tv("1(3)"), tv("2")}) == tv("@(1(3),2)"));

  // empty brace is the identity
  TreeVector x = tv("1(2)") + Rational(2) * tv("2(1)");
  CHECK(brace(x, {}) == x);
}

TEST_CASE("brace is symmetric and matches the recursion") {
  std::vector<TreeVector> pool = {tv("3"), tv("4"), tv("3(5)")};
  std::vector<TreeVector> hosts = {tv("1"), tv("1(2)"), tv("1(2,6)")};
  for (const TreeVector& x : hosts) {
    std::vector<std::size_t> perm = {0, 1, 2};
    TreeVector reference = brace(x, pool);
    do {
      CHECK(brace(x, {pool[perm[0]], pool[perm[1]], pool[perm[2]]}) == reference);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(reference == brace_by_recursion(x, pool));
    CHECK(brace(x, {pool[0], pool[1]}) == brace_by_recursion(x, {pool[0], pool[1]}));
    CHECK(brace(x, {pool[0]}) == star(x, pool[0]));
  }
}

TEST_CASE("bracket") {
  CHECK(bracket(tv("1"), tv("2")) == tv("1(2)") - tv("2(1)"));
  TreeVector x = tv("1(2)") + tv("2(1)");
  CHECK(bracket(x, x).is_zero());
  CHECK_THROWS_AS(bracket(tv("@"), tv("1")), std::invalid_argument);
}

TEST_CASE("associator examples") {
  CHECK(associator(tv("1"), tv("2"), tv("3")) == tv("1(2,3)"));
  CHECK((associator(tv("1"), tv("2"), tv("3")) - associator(tv("1"), tv("3"), tv("2"))).is_zero());
  // Phi(o, a, b) = o<a, b>
  TreeVector a = tv("1(2)");
  TreeVector b = tv("3");
  CHECK(associator(tv("@"), a, b) == brace(tv("@"), {a, b}));
}

TEST_CASE("pre-Lie identity, exhaustive at small size") {
  std::vector<std::vector<Tree>> by_size(5);
  for (int n = 1; n <= 4; ++n) by_size[n] = enumerate_trees(n, LabelMode::multilinear());
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; i + j <= 4; ++j)
      for (int k = 1; i + j + k <= 5; ++k)
        for (const Tree& x : by_size[i])
          for (const Tree& y : by_size[j])
            for (const Tree& z : by_size[k]) {
              TreeVector vx = tree_vector(x), vy = tree_vector(y), vz = tree_vector(z);
              CHECK(associator(vx, vy, vz) == associator(vx, vz, vy));
            }
}

TEST_CASE("Jacobi identity on random vectors") {
  std::mt19937 rng(7);
  auto trees = enumerate_trees(3, LabelMode::multilinear());
  std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 15; ++trial) {
    TreeVector x, y, z;
    for (int i = 0; i < 2; ++i) {
      x.add(trees[pick(rng)], coeff(rng) * 2 + 1);
      y.add(trees[pick(rng)], coeff(rng) * 2 + 1);
      z.add(trees[pick(rng)], coeff(rng) * 2 + 1);
    }
    TreeVector jacobi =
        bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
    CHECK(jacobi.is_zero());
  }
}
