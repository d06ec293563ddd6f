#include <array>
#include <map>
#include <random>

#include "doctest.h"
#include "prelie/shuffle.hpp"

using namespace prelie;

namespace {

Word w(std::vector<int> letters) { return Word(std::move(letters)); }
TensorVector tw(std::vector<int> letters) { return TensorVector::single(w(std::move(letters))); }
PairVector pair(std::vector<int> a, std::vector<int> b) {
  return PairVector::single(WordPair{w(std::move(a)), w(std::move(b))});
}

using Triple = std::array<Word, 3>;

std::map<Triple, Rational> triple_split(const Word& word, bool left_first) {
  std::map<Triple, Rational> out;
  for (const auto& [p, c1] : coproduct(word)) {
    const Word& part = left_first ? p.left : p.right;
    for (const auto& [inner, c2] : coproduct(part)) {
      Triple key = left_first ? Triple{inner.left, inner.right, p.right}
                              : Triple{p.left, inner.left, inner.right};
      auto [it, inserted] = out.emplace(std::move(key), 0);
      it->second += c1 * c2;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("concatenation") {
  CHECK(concat(tw({1}), tw({2})) == tw({1, 2}));
  CHECK(concat(TensorVector::single(Word::unit()), tw({1, 2})) == tw({1, 2}));
  CHECK(concat(tw({1}) + tw({2}), tw({3})) == tw({1, 3}) + tw({2, 3}));
}

TEST_CASE("coproduct examples") {
  CHECK(coproduct(w({1})) == pair({}, {1}) + pair({1}, {}));
  CHECK(coproduct(w({1, 2})) ==
        pair({}, {1, 2}) + pair({1}, {2}) + pair({2}, {1}) + pair({1, 2}, {}));
  CHECK(coproduct(Word::unit()) == pair({}, {}));
}

TEST_CASE("reduced coproduct examples") {
  CHECK(reduced_coproduct(tw({1})).is_zero());
  CHECK(reduced_coproduct(tw({1, 2})) == pair({1}, {2}) + pair({2}, {1}));
  // commutators are primitive
  CHECK(reduced_coproduct(tw({1, 2}) - tw({2, 1})).is_zero());
  CHECK_THROWS_AS(reduced_coproduct(TensorVector::single(Word::unit())), std::invalid_argument);
}

TEST_CASE("star actions") {
  PairVector unit_pair = pair({}, {});
  CHECK(act_left(tw({1}), unit_pair) == pair({}, {1}) + pair({1}, {}));
  CHECK(act_left(tw({1}), pair({2}, {3})) == pair({2}, {1, 3}) + pair({1, 2}, {3}));

  CHECK(act_right(unit_pair, tw({1})) == pair({}, {1}) + pair({1}, {}));
  CHECK(act_right(pair({1}, {2}), tw({3})) == pair({1}, {2, 3}) + pair({1, 3}, {2}));

  // (x.y) * xi = x * (y * xi)
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter(1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    TensorVector x = tw({letter(rng), letter(rng)});
    TensorVector y = tw({letter(rng)});
    PairVector xi = pair({letter(rng)}, {letter(rng), letter(rng)});
    CHECK(act_left(concat(x, y), xi) == act_left(x, act_left(y, xi)));
    CHECK(act_right(act_left(x, xi), y) == act_left(x, act_right(xi, y)));
  }

  // the non-associativity defect of the right action is the R form
  TensorVector u = tw({1});
  TensorVector v = tw({2});
  CHECK(act_right(act_right(pair({}, {}), u), v) - act_right(pair({}, {}), concat(u, v)) ==
        r_form(u, v));
}

TEST_CASE("R form and the derivation rule") {
  CHECK(r_form(tw({1}), tw({2})) == pair({1}, {2}) + pair({2}, {1}));
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> letter(1, 3);
  std::uniform_int_distribution<int> len(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> lx(len(rng)), ly(len(rng));
    for (int& l : lx) l = letter(rng);
    for (int& l : ly) l = letter(rng);
    TensorVector x = tw(lx), y = tw(ly);
    CHECK(r_form(x, y) == r_form(y, x));
    CHECK(reduced_coproduct(concat(x, y)) ==
          act_right(reduced_coproduct(x), y) + act_left(x, reduced_coproduct(y)) + r_form(x, y));
  }
}

TEST_CASE("bimodule identities") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> letter(1, 3);
  for (int trial = 0; trial < 15; ++trial) {
    TensorVector x = tw({letter(rng)});
    TensorVector y = tw({letter(rng), letter(rng)});
    PairVector xi = pair({letter(rng)}, {letter(rng)}) + pair({letter(rng), letter(rng)}, {letter(rng)});
    CHECK(act_right(act_right(xi, x), y) - act_right(xi, concat(x, y)) ==
          act_right(act_right(xi, y), x) - act_right(xi, concat(y, x)));
    CHECK(act_left(concat(x, y), xi) - act_left(x, act_left(y, xi)) ==
          act_right(act_left(x, xi), y) - act_left(x, act_right(xi, y)));
  }
}

TEST_CASE("coassociativity and cocommutativity") {
  for (int n = 1; n <= 5; ++n)
    for (const Word& word : word_component(n, LabelMode::multilinear())) {
      CHECK(triple_split(word, true) == triple_split(word, false));
      PairVector image = coproduct(word);
      PairVector swapped;
      for (const auto& [p, c] : image) swapped.add(WordPair{p.right, p.left}, c);
      CHECK(swapped == image);
    }
}

TEST_CASE("coproduct is an algebra map") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> letter(1, 3);
  std::uniform_int_distribution<int> len(1, 3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<int> lx(len(rng)), ly(len(rng));
    for (int& l : lx) l = letter(rng);
    for (int& l : ly) l = letter(rng);
    TensorVector x = tw(lx), y = tw(ly);
    CHECK(coproduct(concat(x, y)) == pair_concat(coproduct(x), coproduct(y)));
  }
}

TEST_CASE("primitive basis dimensions") {
  CHECK(primitive_basis(1).dimension() == 1);
  auto two = primitive_basis(2);
  REQUIRE(two.dimension() == 1);
  CHECK(two.vector_at(0) == tw({1, 2}) - tw({2, 1}));
  CHECK(primitive_basis(4).dimension() == 6);
  long factorial = 1;
  for (int n = 1; n <= 6; ++n) {
    if (n >= 2) factorial *= n - 1;
    CHECK(primitive_basis(n).dimension() == factorial);
  }
}
