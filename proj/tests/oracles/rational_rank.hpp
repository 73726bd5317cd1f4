#pragma once

// Dense rational Gaussian elimination. Deliberately shares no code with the
// library's Smith normal form.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cellstrat/delta_set.hpp"

namespace oracle {

using QMatrix = std::vector<std::vector<mpq_class>>;

using SparseRow = std::map<std::size_t, mpq_class>;

// Incremental echelon basis keyed by leading column.
inline std::size_t rational_rank(const std::vector<SparseRow>& rows) {
  std::map<std::size_t, SparseRow> basis;
  for (SparseRow row : rows) {
    while (!row.empty()) {
      const auto [lead, value] = *row.begin();
      auto it = basis.find(lead);
      if (it == basis.end()) {
        basis.emplace(lead, std::move(row));
        break;
      }
      const mpq_class factor = value / it->second.at(lead);
      for (const auto& [c, v] : it->second) {
        mpq_class& slot = row[c];
        slot -= factor * v;
        if (slot == 0) row.erase(c);
      }
    }
  }
  return basis.size();
}

inline std::size_t rational_rank(const QMatrix& m) {
  std::vector<SparseRow> rows;
  for (const auto& dense : m) {
    SparseRow row;
    for (std::size_t c = 0; c < dense.size(); ++c) {
      if (dense[c] != 0) row.emplace(c, dense[c]);
    }
    rows.push_back(std::move(row));
  }
  return rational_rank(rows);
}

inline mpq_class determinant(QMatrix m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      mpq_class factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

// Boundary matrix ∂_n read straight off the face maps, one row per n-cell
// (the transpose, which has the same rank).
inline std::vector<SparseRow> boundary_rows(const cellstrat::DeltaSet& d, std::size_t n) {
  std::vector<SparseRow> rows(d.size(n));
  for (std::size_t i = 0; i < d.size(n); ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      mpq_class& slot = rows[i][d.face(n, i, j)];
      slot += (j % 2 == 0) ? 1 : -1;
      if (slot == 0) rows[i].erase(d.face(n, i, j));
    }
  }
  return rows;
}

// Betti numbers over ℚ.
inline std::vector<std::size_t> rational_betti(const cellstrat::DeltaSet& d) {
  const std::size_t levels = d.levels();
  std::vector<std::size_t> ranks(levels + 1, 0);
  for (std::size_t n = 1; n < levels; ++n) ranks[n] = rational_rank(boundary_rows(d, n));
  std::vector<std::size_t> betti(levels, 0);
  for (std::size_t n = 0; n < levels; ++n) betti[n] = d.size(n) - ranks[n] - ranks[n + 1];
  return betti;
}

}  // namespace oracle
