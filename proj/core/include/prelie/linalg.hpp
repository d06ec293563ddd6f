#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "prelie/basis_vector.hpp"
#include "prelie/rational.hpp"

namespace prelie {

// Sparse vector over integer positions, sorted by position.
using SparseRow = std::vector<std::pair<int, Rational>>;

namespace detail {

using IntRow = std::vector<std::pair<int, Integer>>;

struct Elimination {
  int rank = 0;
  // Kernel basis in reduced echelon form over the column index order.
  std::vector<SparseRow> kernel;
};

// Fraction-free Gauss-Jordan elimination over the integers. Pivots chosen
// sparsest-column-first, then sparsest row; ties broken by index, so the
// result is deterministic. Rows are rescaled primitive after every update.
Elimination eliminate(int column_count, std::vector<IntRow> rows, bool want_kernel, int threads);

// Unique reduced row echelon form of the span of the given rows: pivot
// positions strictly increasing, pivot coefficients 1, pivot positions
// cleared from all other rows.
std::vector<SparseRow> reduced_echelon(std::vector<SparseRow> rows);

}  // namespace detail

// Deterministic reduced basis of a subspace of a basis-indexed vector space.
// Invariants: rows are in reduced echelon form with respect to the universe
// order, pivot coefficients are 1, each pivot position is absent from every
// other row.
template <typename Key>
struct SubspaceBasis {
  std::vector<Key> universe;
  std::vector<SparseRow> rows;

  int dimension() const { return static_cast<int>(rows.size()); }

  BasisVector<Key> vector_at(int i) const {
    BasisVector<Key> v;
    for (const auto& [idx, coeff] : rows.at(i)) v.add(universe.at(idx), coeff);
    return v;
  }
};

template <typename RowKey, typename ColKey>
struct SparseMatrix {
  std::vector<RowKey> row_keys;
  std::vector<ColKey> col_keys;
  // columns[j]: (row index, value), sorted by row index.
  std::vector<SparseRow> columns;

  int row_count() const { return static_cast<int>(row_keys.size()); }
  int col_count() const { return static_cast<int>(col_keys.size()); }
};

namespace detail {

// Row-major integer rows: each row rescaled by the lcm of its denominators.
template <typename RowKey, typename ColKey>
std::vector<IntRow> integer_rows(const SparseMatrix<RowKey, ColKey>& m) {
  std::vector<SparseRow> rows(m.row_keys.size());
  for (int j = 0; j < m.col_count(); ++j)
    for (const auto& [i, value] : m.columns[j]) rows[i].emplace_back(j, value);
  std::vector<IntRow> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Integer scale(1);
    for (const auto& [j, value] : rows[i]) scale = lcm(scale, value.get_den());
    out[i].reserve(rows[i].size());
    for (const auto& [j, value] : rows[i]) {
      Rational scaled = value * Rational(scale);
      out[i].emplace_back(j, scaled.get_num());
    }
  }
  return out;
}

}  // namespace detail

template <typename RowKey, typename ColKey>
int rank(const SparseMatrix<RowKey, ColKey>& m, int threads = 1) {
  return detail::eliminate(m.col_count(), detail::integer_rows(m), false, threads).rank;
}

// Reduced echelon basis of {x : Mx = 0}; dimension = columns - rank.
template <typename RowKey, typename ColKey>
SubspaceBasis<ColKey> kernel_basis(const SparseMatrix<RowKey, ColKey>& m, int threads = 1) {
  auto result = detail::eliminate(m.col_count(), detail::integer_rows(m), true, threads);
  return SubspaceBasis<ColKey>{m.col_keys, std::move(result.kernel)};
}

// Reduce arbitrary spanning vectors to the canonical SubspaceBasis. Keys not
// present in the universe are an error.
template <typename Key>
SubspaceBasis<Key> make_subspace(std::vector<Key> universe,
                                 const std::vector<BasisVector<Key>>& vectors) {
  std::map<Key, int> index;
  for (std::size_t i = 0; i < universe.size(); ++i) index.emplace(universe[i], static_cast<int>(i));
  std::vector<SparseRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    SparseRow row;
    for (const auto& [key, coeff] : v) {
      auto it = index.find(key);
      if (it == index.end()) throw std::invalid_argument("vector key outside the basis universe");
      row.emplace_back(it->second, coeff);
    }
    rows.push_back(std::move(row));
  }
  return SubspaceBasis<Key>{std::move(universe), detail::reduced_echelon(std::move(rows))};
}

template <typename Key>
bool subspaces_equal(const SubspaceBasis<Key>& a, const SubspaceBasis<Key>& b) {
  if (a.universe != b.universe) throw std::invalid_argument("subspace key universes differ");
  return a.rows == b.rows;
}

// True iff v reduces to zero against the basis.
template <typename Key>
bool member_of_span(const BasisVector<Key>& v, const SubspaceBasis<Key>& basis) {
  if (v.is_zero()) return true;
  std::map<Key, int> index;
  for (std::size_t i = 0; i < basis.universe.size(); ++i)
    index.emplace(basis.universe[i], static_cast<int>(i));
  std::map<int, Rational> work;
  for (const auto& [key, coeff] : v) {
    auto it = index.find(key);
    if (it == index.end()) throw std::invalid_argument("vector key outside the basis universe");
    work.emplace(it->second, coeff);
  }
  for (const SparseRow& row : basis.rows) {
    if (row.empty()) continue;
    auto hit = work.find(row.front().first);
    if (hit == work.end()) continue;
    Rational factor = hit->second;  // pivot coefficient is 1
    for (const auto& [idx, coeff] : row) {
      auto [it, inserted] = work.emplace(idx, 0);
      it->second -= factor * coeff;
      if (it->second == 0) work.erase(it);
    }
  }
  return work.empty();
}

}  // namespace prelie
