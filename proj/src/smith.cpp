// Copyright 2026 The salv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <climits>

#include "salv/homology.hpp"

namespace salv {

namespace {

struct Overflow {};

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
long long magnitude(long long a) {
  if (a == LLONG_MIN) throw Overflow{};
  return a < 0 ? -a : a;
}

Integer checked_mul(const Integer& a, const Integer& b) { return a * b; }
Integer checked_sub(const Integer& a, const Integer& b) { return a - b; }
Integer checked_add(const Integer& a, const Integer& b) { return a + b; }
Integer magnitude(const Integer& a) { return a < 0 ? Integer(-a) : a; }

template <class Int>
using Row = std::vector<std::pair<std::uint32_t, Int>>;

template <class Int>
const Int* find_entry(const Row<Int>& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

// target -= f * source; reports columns that became nonzero.
template <class Int>
void subtract_multiple(Row<Int>& target, const Row<Int>& source, const Int& f,
                       std::vector<std::uint32_t>& new_cols) {
  Row<Int> out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == target.end() || b->first < a->first) {
      Int v = checked_sub(Int(0), checked_mul(f, b->second));
      new_cols.push_back(b->first);
      out.emplace_back(b->first, std::move(v));
      ++b;
    } else {
      Int v = checked_sub(a->second, checked_mul(f, b->second));
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

template <class Int>
std::vector<Int> dense_smith(std::vector<std::vector<Int>> a) {
  const std::size_t n = a.size();
  const std::size_t m = n == 0 ? 0 : a[0].size();
  std::vector<Int> diag;
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };
  for (std::size_t t = 0; t < std::min(n, m); ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    bool found = false;
    std::size_t p = t, q = t;
    Int best = 0;
    for (std::size_t i = t; i < n; ++i) {
      for (std::size_t j = t; j < m; ++j) {
        if (a[i][j] == 0) continue;
        Int mag = magnitude(a[i][j]);
        if (!found || mag < best) {
          found = true;
          best = mag;
          p = i;
          q = j;
        }
      }
    }
    if (!found) break;
    std::swap(a[t], a[p]);
    swap_cols(t, q);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        const Int quotient = a[i][t] / a[t][t];
        for (std::size_t j = t; j < m; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(quotient, a[t][j]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (a[t][j] == 0) continue;
        const Int quotient = a[t][j] / a[t][t];
        for (std::size_t i = t; i < n; ++i) a[i][j] = checked_sub(a[i][j], checked_mul(quotient, a[i][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder is smaller than the pivot; move the smallest into place.
        std::size_t bi = t, bj = t;
        Int bmag = magnitude(a[t][t]);
        for (std::size_t i = t + 1; i < n; ++i) {
          if (a[i][t] != 0 && magnitude(a[i][t]) < bmag) { bmag = magnitude(a[i][t]); bi = i; bj = t; }
        }
        for (std::size_t j = t + 1; j < m; ++j) {
          if (a[t][j] != 0 && magnitude(a[t][j]) < bmag) { bmag = magnitude(a[t][j]); bi = t; bj = j; }
        }
        std::swap(a[t], a[bi]);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i) {
        for (std::size_t j = t + 1; j < m; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < m; ++k) a[t][k] = checked_add(a[t][k], a[i][k]);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(magnitude(a[t][t]));
  }
  return diag;
}

template <class Int>
std::vector<Integer> sparse_smith(const SparseMatrix& m) {
  std::vector<Row<Int>> rows(m.rows);
  std::vector<std::vector<std::uint32_t>> col_rows(m.cols);
  for (std::uint32_t c = 0; c < m.cols; ++c) {
    for (const auto& [r, v] : m.columns[c]) {
      if (v == 0) continue;
      rows[r].emplace_back(c, Int(v));
      col_rows[c].push_back(r);
    }
  }
  for (auto& row : rows) std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  std::size_t units = 0;
  std::vector<bool> col_done(m.cols, false);
  std::vector<std::uint32_t> new_cols;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::uint32_t j = 0; j < m.cols; ++j) {
      if (col_done[j]) continue;
      auto& cand = col_rows[j];
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      std::erase_if(cand, [&](std::uint32_t r) { return find_entry(rows[r], j) == nullptr; });
      if (cand.empty()) {
        col_done[j] = true;  // zero columns stay zero under row operations
        continue;
      }
      std::uint32_t pivot = 0;
      bool have_pivot = false;
      for (std::uint32_t r : cand) {
        const Int& v = *find_entry(rows[r], j);
        if (v != 1 && v != -1) continue;
        if (!have_pivot || rows[r].size() < rows[pivot].size()) {
          pivot = r;
          have_pivot = true;
        }
      }
      if (!have_pivot) continue;
      const Int pv = *find_entry(rows[pivot], j);
      const Row<Int> pivot_row = rows[pivot];
      for (std::uint32_t r : cand) {
        if (r == pivot) continue;
        const Int f = checked_mul(*find_entry(rows[r], j), pv);
        new_cols.clear();
        subtract_multiple(rows[r], pivot_row, f, new_cols);
        for (std::uint32_t c : new_cols) col_rows[c].push_back(r);
      }
      // Column j is now supported on the pivot row alone, so the pivot row
      // can be cleared by column operations that touch nothing else.
      rows[pivot].clear();
      cand.clear();
      col_done[j] = true;
      ++units;
      progress = true;
    }
  }

  // Dense remainder.
  std::vector<std::uint32_t> live_cols;
  for (std::uint32_t j = 0; j < m.cols; ++j) {
    if (!col_done[j]) live_cols.push_back(j);
  }
  std::vector<std::vector<Int>> dense;
  for (const auto& row : rows) {
    if (row.empty()) continue;
    std::vector<Int> d(live_cols.size(), Int(0));
    for (const auto& [c, v] : row) {
      auto it = std::lower_bound(live_cols.begin(), live_cols.end(), c);
      d[static_cast<std::size_t>(it - live_cols.begin())] = v;
    }
    dense.push_back(std::move(d));
  }
  std::vector<Integer> factors(units, Integer(1));
  for (const Int& v : dense_smith<Int>(std::move(dense))) factors.emplace_back(v);
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<long long>>& dense) {
  SparseMatrix m;
  m.rows = dense.size();
  m.cols = dense.empty() ? 0 : dense[0].size();
  m.columns.resize(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (dense[r][c] != 0) m.columns[c].emplace_back(static_cast<std::uint32_t>(r), dense[r][c]);
    }
  }
  return m;
}

std::vector<std::vector<long long>> SparseMatrix::to_dense() const {
  std::vector<std::vector<long long>> d(rows, std::vector<long long>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c) {
    for (const auto& [r, v] : columns[c]) d[r][c] = v;
  }
  return d;
}

SmithForm smith_normal_form(const SparseMatrix& m) {
  try {
    return {sparse_smith<long long>(m)};
  } catch (const Overflow&) {
    return {sparse_smith<Integer>(m)};
  }
}

SmithForm smith_normal_form(const std::vector<std::vector<long long>>& dense) {
  return smith_normal_form(SparseMatrix::from_dense(dense));
}

}  // namespace salv
