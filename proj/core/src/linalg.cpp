#include "prelie/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "prelie/parallel.hpp"

namespace prelie::detail {

namespace {

enum class RowState { active, pivot, spent };

// Divide by the content and make the leading coefficient positive.
void normalize(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [col, value] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
    if (g == 1) break;
  }
  if (g > 1) {
    for (auto& [col, value] : row) mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), g.get_mpz_t());
  }
  if (row.front().second < 0) {
    for (auto& [col, value] : row) value = -value;
  }
}

// row*p - pivot*a; the pivot column cancels exactly.
IntRow combine(const IntRow& row, const IntRow& pivot, const Integer& p, const Integer& a) {
  IntRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  Integer value;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      value = row[i].second * p;
      out.emplace_back(row[i].first, value);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      value = pivot[j].second * a;
      value = -value;
      out.emplace_back(pivot[j].first, value);
      ++j;
    } else {
      value = row[i].second * p - pivot[j].second * a;
      if (value != 0) out.emplace_back(row[i].first, value);
      ++i;
      ++j;
    }
  }
  normalize(out);
  return out;
}

const Integer* find_entry(const IntRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& entry, int c) { return entry.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

}  // namespace

std::vector<SparseRow> reduced_echelon(std::vector<SparseRow> input) {
  std::map<int, std::map<int, Rational>> basis;  // pivot index -> row
  for (const SparseRow& raw : input) {
    std::map<int, Rational> work(raw.begin(), raw.end());
    while (!work.empty()) {
      const int lead = work.begin()->first;
      auto hit = basis.find(lead);
      if (hit == basis.end()) break;
      const Rational factor = work.begin()->second;  // basis pivot coefficient is 1
      for (const auto& [idx, coeff] : hit->second) {
        auto [it, inserted] = work.emplace(idx, 0);
        it->second -= factor * coeff;
        if (it->second == 0) work.erase(it);
      }
    }
    if (work.empty()) continue;
    const int lead = work.begin()->first;
    const Rational inv = 1 / work.begin()->second;
    for (auto& [idx, coeff] : work) coeff *= inv;
    // clear remaining known pivots from the new row
    for (auto it = basis.upper_bound(lead); it != basis.end(); ++it) {
      auto present = work.find(it->first);
      if (present == work.end()) continue;
      const Rational factor = present->second;
      for (const auto& [idx, coeff] : it->second) {
        auto [slot, inserted] = work.emplace(idx, 0);
        slot->second -= factor * coeff;
        if (slot->second == 0) work.erase(slot);
      }
    }
    // clear the new pivot from existing rows
    for (auto& [piv, row] : basis) {
      auto present = row.find(lead);
      if (present == row.end()) continue;
      const Rational factor = present->second;
      for (const auto& [idx, coeff] : work) {
        auto [slot, inserted] = row.emplace(idx, 0);
        slot->second -= factor * coeff;
        if (slot->second == 0) row.erase(slot);
      }
    }
    basis.emplace(lead, std::move(work));
  }
  std::vector<SparseRow> out;
  out.reserve(basis.size());
  for (const auto& [piv, row] : basis) out.emplace_back(row.begin(), row.end());
  return out;
}

Elimination eliminate(int column_count, std::vector<IntRow> rows, bool want_kernel, int threads) {
  const int row_count = static_cast<int>(rows.size());
  std::vector<RowState> state(row_count, RowState::active);
  std::vector<int> col_nnz(column_count, 0);
  std::vector<std::vector<int>> col_rows(column_count);

  for (int r = 0; r < row_count; ++r) {
    normalize(rows[r]);
    if (rows[r].empty()) {
      state[r] = RowState::spent;
      continue;
    }
    for (const auto& [col, value] : rows[r]) {
      ++col_nnz[col];
      col_rows[col].push_back(r);
    }
  }

  std::vector<std::pair<int, int>> pivots;  // (row, column)
  std::vector<int> candidates;
  std::vector<IntRow> updated;

  while (true) {
    // sparsest remaining column, ties to the smallest index
    int pivot_col = -1;
    for (int c = 0; c < column_count; ++c) {
      if (col_nnz[c] > 0 && (pivot_col == -1 || col_nnz[c] < col_nnz[pivot_col])) pivot_col = c;
    }
    if (pivot_col == -1) break;

    candidates.clear();
    std::sort(col_rows[pivot_col].begin(), col_rows[pivot_col].end());
    col_rows[pivot_col].erase(std::unique(col_rows[pivot_col].begin(), col_rows[pivot_col].end()),
                              col_rows[pivot_col].end());
    for (int r : col_rows[pivot_col]) {
      if (state[r] != RowState::spent && find_entry(rows[r], pivot_col)) candidates.push_back(r);
    }

    int pivot_row = -1;
    for (int r : candidates) {
      if (state[r] != RowState::active) continue;
      if (pivot_row == -1 || rows[r].size() < rows[pivot_row].size()) pivot_row = r;
    }
    assert(pivot_row != -1);

    state[pivot_row] = RowState::pivot;
    for (const auto& [col, value] : rows[pivot_row]) --col_nnz[col];
    pivots.emplace_back(pivot_row, pivot_col);

    const Integer pivot_value = *find_entry(rows[pivot_row], pivot_col);
    std::erase(candidates, pivot_row);

    updated.assign(candidates.size(), IntRow{});
    const IntRow& pivot_entries = rows[pivot_row];
    parallel_for(candidates.size(), threads, [&](std::size_t i) {
      const int r = candidates[i];
      const Integer& a = *find_entry(rows[r], pivot_col);
      updated[i] = combine(rows[r], pivot_entries, pivot_value, a);
    });

    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const int r = candidates[i];
      if (state[r] == RowState::active) {
        for (const auto& [col, value] : rows[r]) --col_nnz[col];
        for (const auto& [col, value] : updated[i]) {
          ++col_nnz[col];
          col_rows[col].push_back(r);
        }
        if (updated[i].empty()) state[r] = RowState::spent;
      } else {
        for (const auto& [col, value] : updated[i]) col_rows[col].push_back(r);
      }
      rows[r] = std::move(updated[i]);
    }
    col_rows[pivot_col].clear();
  }

  Elimination result;
  result.rank = static_cast<int>(pivots.size());
  if (!want_kernel) return result;

  std::vector<char> is_pivot_col(column_count, 0);
  for (const auto& [r, c] : pivots) is_pivot_col[c] = 1;

  // After full elimination each pivot row holds its pivot column and free
  // columns only, so kernel vectors read off directly.
  std::map<int, SparseRow> by_free_col;
  for (int c = 0; c < column_count; ++c)
    if (!is_pivot_col[c]) by_free_col.emplace(c, SparseRow{});
  for (const auto& [r, c] : pivots) {
    const Integer& p = *find_entry(rows[r], c);
    for (const auto& [col, value] : rows[r]) {
      if (col == c) continue;
      assert(!is_pivot_col[col]);
      Rational coeff(-value, p);
      coeff.canonicalize();
      by_free_col.at(col).emplace_back(c, coeff);
    }
  }
  std::vector<SparseRow> raw;
  raw.reserve(by_free_col.size());
  for (auto& [f, entries] : by_free_col) {
    entries.emplace_back(f, Rational(1));
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    raw.push_back(std::move(entries));
  }
  result.kernel = reduced_echelon(std::move(raw));
  return result;
}

}  // namespace prelie::detail
