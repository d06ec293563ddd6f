#include <random>
#include <string>

#include "doctest.h"
#include "prelie/linalg.hpp"

using namespace prelie;

namespace {

using Matrix = SparseMatrix<std::string, std::string>;

std::vector<std::string> keys(int n, const std::string& prefix) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Matrix from_dense(const std::vector<std::vector<int>>& rows) {
  Matrix m;
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  m.row_keys = keys(r, "r");
  m.col_keys = keys(c, "c");
  m.columns.resize(c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rows[i][j] != 0) m.columns[j].emplace_back(i, rows[i][j]);
  return m;
}

// independent check: every kernel vector satisfies Mx = 0 exactly
void check_annihilated(const Matrix& m, const SubspaceBasis<std::string>& basis) {
  for (const SparseRow& row : basis.rows) {
    std::map<int, Rational> image;
    for (const auto& [col, coeff] : row)
      for (const auto& [r, value] : m.columns[col]) {
        auto [it, inserted] = image.emplace(r, 0);
        it->second += value * coeff;
        if (it->second == 0) image.erase(it);
      }
    CHECK(image.empty());
  }
}

}  // namespace

TEST_CASE("rational representation stays canonical") {
  Rational q(6, 8);
  q.canonicalize();
  CHECK(plain_string(q) == "3/4");
  CHECK(fraction_string(q) == "3/4");
  CHECK(fraction_string(Rational(2)) == "2/1");
  CHECK(plain_string(Rational(1, 3) + Rational(1, 6)) == "1/2");
  CHECK(plain_string(Rational(1, 3) - Rational(1, 3)) == "0");
}

TEST_CASE("basis vector drops zeros") {
  BasisVector<std::string> v;
  v.add("a", Rational(1, 2));
  v.add("a", Rational(1, 2));
  CHECK(v.coefficient("a") == 1);
  v.add("a", -1);
  CHECK(v.is_zero());
  v.add("b", 3);
  CHECK((v - v).is_zero());
}

TEST_CASE("kernel examples") {
  // 2x2 identity: empty basis
  CHECK(kernel_basis(from_dense({{1, 0}, {0, 1}})).dimension() == 0);

  // 2x2 zero matrix: the whole plane
  auto zero = kernel_basis(from_dense({{0, 0}, {0, 0}}));
  REQUIRE(zero.dimension() == 2);
  CHECK(zero.rows[0] == SparseRow{{0, 1}});
  CHECK(zero.rows[1] == SparseRow{{1, 1}});

  // single row (1 1): span of (1, -1) after normalization
  auto line = kernel_basis(from_dense({{1, 1}}));
  REQUIRE(line.dimension() == 1);
  CHECK(line.rows[0] == SparseRow{{0, 1}, {1, -1}});
}

TEST_CASE("rank examples") {
  CHECK(rank(from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(rank(from_dense({{0, 0}, {0, 0}})) == 0);
  CHECK(rank(from_dense({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("subspace comparison") {
  std::vector<std::string> universe = keys(2, "c");
  using V = BasisVector<std::string>;
  auto span = [&](const std::vector<V>& vs) { return make_subspace(universe, vs); };

  CHECK(subspaces_equal(span({}), span({})));
  V e0 = V::single("c0");
  V e1 = V::single("c1");
  CHECK(subspaces_equal(span({e0}), span({Rational(2) * e0})));
  CHECK_FALSE(subspaces_equal(span({e0}), span({e1})));

  auto other_universe = make_subspace(keys(3, "c"), std::vector<V>{});
  CHECK_THROWS_AS(subspaces_equal(span({}), other_universe), std::invalid_argument);
}

TEST_CASE("member of span") {
  std::vector<std::string> universe = keys(2, "c");
  using V = BasisVector<std::string>;
  V diag = V::single("c0") + V::single("c1");
  auto basis = make_subspace(universe, {diag});
  CHECK(member_of_span(V{}, basis));
  CHECK(member_of_span(diag, basis));
  CHECK_FALSE(member_of_span(V::single("c0"), basis));
}

TEST_CASE("rank plus kernel dimension is the column count") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 1 + trial % 5;
    const int c = 1 + (trial / 2) % 6;
    std::vector<std::vector<int>> dense(r, std::vector<int>(c));
    for (auto& row : dense)
      for (int& value : row) value = entry(rng);
    Matrix m = from_dense(dense);
    auto basis = kernel_basis(m);
    CHECK(rank(m) + basis.dimension() == c);
    check_annihilated(m, basis);
  }
}

TEST_CASE("elimination is deterministic and idempotent") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::vector<std::vector<int>> dense(6, std::vector<int>(7));
  for (auto& row : dense)
    for (int& value : row) value = entry(rng);
  Matrix m = from_dense(dense);
  auto once = kernel_basis(m, 1);
  auto again = kernel_basis(m, 4);
  CHECK(once.rows == again.rows);
  // reducing the reduced basis changes nothing
  CHECK(detail::reduced_echelon(once.rows) == once.rows);
  for (const SparseRow& row : once.rows) {
    REQUIRE(!row.empty());
    CHECK(row.front().second == 1);
  }
  for (std::size_t i = 1; i < once.rows.size(); ++i)
    CHECK(once.rows[i - 1].front().first < once.rows[i].front().first);
}
