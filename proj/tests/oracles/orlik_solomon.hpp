#pragma once

// Poincaré polynomial of an arrangement complement from the Möbius function
// of its intersection poset. Independent of face enumeration.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "rational_rank.hpp"

namespace oracle {

struct Hyperplane {
  std::vector<mpq_class> a;
  mpq_class c;  // a·x + c = 0
};

// Coefficients of π(t) = Σ_X μ(X) (−t)^{codim X}.
inline std::vector<std::int64_t> poincare_polynomial(const std::vector<Hyperplane>& hs, std::size_t dim) {
  const std::size_t m = hs.size();
  auto rank_of = [&](std::uint32_t mask, bool augmented) {
    QMatrix rows;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1u)) continue;
      std::vector<mpq_class> row = hs[i].a;
      if (augmented) row.push_back(hs[i].c);
      rows.push_back(row);
    }
    return rational_rank(rows);
  };

  // Each nonempty flat, keyed by the full set of hyperplanes containing it.
  std::map<std::uint32_t, std::size_t> flats;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const std::size_t r = rank_of(mask, false);
    if (r != rank_of(mask, true)) continue;
    std::uint32_t closure = mask;
    for (std::size_t i = 0; i < m; ++i) {
      if (closure >> i & 1u) continue;
      const std::uint32_t bigger = mask | (1u << i);
      if (rank_of(bigger, false) == r && rank_of(bigger, true) == r) closure = bigger;
    }
    flats[closure] = r;
  }

  std::vector<std::uint32_t> order;
  for (const auto& [mask, r] : flats) order.push_back(mask);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return flats[x] != flats[y] ? flats[x] < flats[y] : x < y;
  });
  std::map<std::uint32_t, std::int64_t> mu;
  std::vector<std::int64_t> poly(dim + 1, 0);
  for (std::uint32_t x : order) {
    std::int64_t value = (x == 0) ? 1 : 0;
    if (x != 0) {
      for (const auto& [y, my] : mu) {
        if ((y & x) == y && y != x) value -= my;
      }
    }
    mu[x] = value;
    const std::size_t r = flats[x];
    poly[r] += (r % 2 == 0) ? value : -value;
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

// Betti numbers of the complement of the arrangement in ℝ^{n}⊗ℝ^{ℓ}: the
// coefficient of t^i sits in degree i·(ℓ−1).
inline std::vector<std::size_t> complement_betti(const std::vector<Hyperplane>& hs, std::size_t dim, int order) {
  const auto poly = poincare_polynomial(hs, dim);
  const std::size_t step = static_cast<std::size_t>(order - 1);
  std::vector<std::size_t> betti((poly.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < poly.size(); ++i) betti[i * step] += static_cast<std::size_t>(poly[i]);
  return betti;
}

}  // namespace oracle
