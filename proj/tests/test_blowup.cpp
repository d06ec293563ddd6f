#include "doctest.h"
#include "prelie/blowup.hpp"
#include "prelie/enumerate.hpp"

using namespace prelie;

namespace {

TreeVector tv(const char* expr) { return tree_vector(parse_tree(expr)); }

long expected_couples(const Tree& t) {
  const long c = static_cast<long>(t.children().size());
  long count = (1L << c) - 1 + (1L << c) - 1 - c;
  for (const Tree& child : t.children()) count += expected_couples(child);
  return count;
}

const Tree* find_special(const Tree& t) {
  if (t.is_special()) return &t;
  for (const Tree& child : t.children())
    if (child.degree() >= 1) return find_special(child);
  return nullptr;
}

}  // namespace

TEST_CASE("blow-up sets of the smallest trees") {
  CHECK(blow_ups(parse_tree("1")).empty());

  auto chain = blow_ups(parse_tree("1(2)"));
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].role == BlowUp::Role::incoming);
  CHECK(chain[0].tree == parse_tree("@(1,2)"));
  CHECK(chain[0].site == 0);

  auto cherry = blow_ups(parse_tree("1(2,3)"));
  CHECK(cherry.size() == 4);
  int incoming = 0, outgoing = 0;
  for (const BlowUp& b : cherry) (b.role == BlowUp::Role::incoming ? incoming : outgoing)++;
  CHECK(incoming == 3);
  CHECK(outgoing == 1);

  CHECK_THROWS_AS(blow_ups(parse_tree("@(1,2)")), std::invalid_argument);
}

TEST_CASE("blow-up structure for all small trees") {
  for (int n = 1; n <= 5; ++n)
    for (const Tree& t : enumerate_trees(n, LabelMode::multilinear())) {
      auto couples = blow_ups(t);
      CHECK(static_cast<long>(couples.size()) == expected_couples(t));
      for (const BlowUp& b : couples) {
        CHECK(b.tree.degree() == 1);
        CHECK(b.tree.ordinary_count() == n);
        const Tree* special = find_special(b.tree);
        REQUIRE(special != nullptr);
        CHECK(special->children().size() >= 2);
        CHECK(contract(b) == t);
      }
    }
  // repeated labels keep couple multiplicity
  for (int n = 1; n <= 4; ++n)
    for (const Tree& t : enumerate_trees(n, LabelMode::alphabet(2))) {
      auto couples = blow_ups(t);
      CHECK(static_cast<long>(couples.size()) == expected_couples(t));
      for (const BlowUp& b : couples) CHECK(contract(b) == t);
    }
}

TEST_CASE("delta on the smallest shapes") {
  CHECK(delta(parse_tree("1")).is_zero());
  CHECK(delta(parse_tree("1(2)")) == tv("@(1,2)"));
  CHECK(delta(parse_tree("1(2(3))")) == tv("@(1,2(3))") + tv("1(@(2,3))"));
  CHECK(delta(parse_tree("1(2,3)")) ==
        tv("@(2,1(3))") + tv("@(3,1(2))") + tv("@(1,2,3)") - tv("1(@(2,3))"));
}

TEST_CASE("delta with repeated labels counts couples per slot choice") {
  // specializing 1(2,3) along 1,2,3 -> a doubles the coefficient of the two
  // isomorphic incoming couples
  CHECK(delta(parse_tree("1(1,1)")) ==
        Rational(2) * tv("@(1,1(1))") + tv("@(1,1,1)") - tv("1(@(1,1))"));
  CHECK(delta(parse_tree("1(1)")) == tv("@(1,1)"));
}

TEST_CASE("delta rejects degree-1 input") {
  CHECK_THROWS_AS(delta(tv("@(1,2)")), std::invalid_argument);
}

TEST_CASE("Leibniz rule with the brace correction") {
  CHECK(leibniz_defect(tv("1"), tv("2")).is_zero());
  CHECK(leibniz_defect(tv("1"), tv("2(3)")).is_zero());
  CHECK(leibniz_defect(tv("1(2)"), tv("3")).is_zero());

  // all pairs of basis trees with |a| + |b| <= 5
  std::vector<std::vector<Tree>> by_size(5);
  for (int n = 1; n <= 4; ++n) by_size[n] = enumerate_trees(n, LabelMode::multilinear());
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; i + j <= 5; ++j)
      for (const Tree& a : by_size[i])
        for (const Tree& b : by_size[j])
          CHECK(leibniz_defect(tree_vector(a), tree_vector(b)).is_zero());

  // repeated labels: the multiplicity-sensitive cases
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; i + j <= 4; ++j)
      for (const Tree& a : enumerate_trees(i, LabelMode::alphabet(1)))
        for (const Tree& b : enumerate_trees(j, LabelMode::alphabet(1)))
          CHECK(leibniz_defect(tree_vector(a), tree_vector(b)).is_zero());
}

TEST_CASE("delta is linear") {
  TreeVector x = Rational(2) * tv("1(2)") - Rational(1, 3) * tv("2(1)");
  CHECK(delta(x) == Rational(2) * delta(parse_tree("1(2)")) -
                        Rational(1, 3) * delta(parse_tree("2(1)")));
}
