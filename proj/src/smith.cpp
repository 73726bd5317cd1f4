#include <algorithm>
#include <map>
#include <set>

#include "cellstrat/integer_matrix.hpp"

namespace cellstrat {
namespace {

// Working copy with both row maps and column occupancy so that row and
// column operations each touch only the affected entries.
class Workspace {
 public:
  explicit Workspace(const IntegerMatrix& m) : rows_(m.rows()), col_rows_(m.cols()) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (const auto& [r, v] : m.column(c)) {
        rows_[r].emplace(c, v);
        col_rows_[c].insert(r);
      }
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!rows_[r].empty()) by_length_.emplace(rows_[r].size(), r);
    }
  }

  // Units come first: among the shortest rows holding a ±1, the one with the
  // lowest Markowitz cost. Otherwise the global minimum of |entry|.
  bool find_pivot(std::size_t& pr, std::size_t& pc) const {
    constexpr std::size_t kUnitRows = 16;
    bool found = false;
    std::size_t best_cost = 0;
    std::size_t unit_rows = 0;
    for (const auto& [len, r] : by_length_) {
      bool has_unit = false;
      for (const auto& [c, v] : rows_[r]) {
        if (mpz_cmpabs_ui(v.get_mpz_t(), 1) != 0) continue;
        has_unit = true;
        const std::size_t cost = (len - 1) * (col_rows_[c].size() - 1);
        if (!found || cost < best_cost) {
          found = true;
          best_cost = cost;
          pr = r;
          pc = c;
          if (cost == 0) return true;
        }
      }
      if (has_unit && ++unit_rows >= kUnitRows) break;
    }
    if (found) return true;

    const BigInt* best = nullptr;
    for (const auto& [len, r] : by_length_) {
      for (const auto& [c, v] : rows_[r]) {
        const std::size_t cost = (len - 1) * (col_rows_[c].size() - 1);
        int cmp = best ? mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) : -1;
        if (cmp < 0 || (cmp == 0 && cost < best_cost)) {
          best = &v;
          best_cost = cost;
          pr = r;
          pc = c;
        }
      }
    }
    return best != nullptr;
  }

  // Eliminates row r and column c around the pivot, moving the pivot to a
  // smaller remainder whenever a division leaves one. Returns |pivot|.
  BigInt eliminate(std::size_t r, std::size_t c) {
    for (;;) {
      const BigInt p = rows_[r].at(c);
      bool residue = false;

      std::vector<std::pair<std::size_t, BigInt>> row_snapshot;
      for (const auto& [c2, v] : rows_[r]) {
        if (c2 != c) row_snapshot.emplace_back(c2, v);
      }
      for (const auto& [c2, v] : row_snapshot) {
        BigInt q = v / p;
        if (q != 0) column_axpy(c2, c, -q);
        if (rows_[r].count(c2)) residue = true;
      }

      std::vector<std::size_t> col_snapshot;
      for (std::size_t r2 : col_rows_[c]) {
        if (r2 != r) col_snapshot.push_back(r2);
      }
      for (std::size_t r2 : col_snapshot) {
        BigInt q = rows_[r2].at(c) / p;
        if (q != 0) row_axpy(r2, r, -q);
        if (rows_[r2].count(c)) residue = true;
      }

      if (!residue) {
        BigInt result = abs(p);
        for (const auto& [c2, v] : rows_[r]) col_rows_[c2].erase(r);
        by_length_.erase({rows_[r].size(), r});
        rows_[r].clear();
        for (std::size_t r2 : col_rows_[c]) {
          const std::size_t before = rows_[r2].size();
          rows_[r2].erase(c);
          relength(r2, before);
        }
        col_rows_[c].clear();
        return result;
      }

      // Move to the smallest remainder left in the pivot row or column.
      const BigInt* best = &rows_[r].at(c);
      std::size_t nr = r;
      std::size_t nc = c;
      for (const auto& [c2, v] : rows_[r]) {
        if (c2 != c && mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) < 0) {
          best = &v;
          nr = r;
          nc = c2;
        }
      }
      for (std::size_t r2 : col_rows_[c]) {
        if (r2 == r) continue;
        const BigInt& v = rows_[r2].at(c);
        if (mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) < 0) {
          best = &v;
          nr = r2;
          nc = c;
        }
      }
      r = nr;
      c = nc;
    }
  }

 private:
  // column dst += factor * column src
  void column_axpy(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t x : col_rows_[src]) {
      auto& row = rows_[x];
      const std::size_t before = row.size();
      BigInt delta = factor * row.at(src);
      auto [it, inserted] = row.try_emplace(dst, 0);
      it->second += delta;
      if (it->second == 0) {
        row.erase(it);
        col_rows_[dst].erase(x);
      } else if (inserted) {
        col_rows_[dst].insert(x);
      }
      relength(x, before);
    }
  }

  // row dst += factor * row src
  void row_axpy(std::size_t dst, std::size_t src, const BigInt& factor) {
    auto& target = rows_[dst];
    const std::size_t before = target.size();
    for (const auto& [y, v] : rows_[src]) {
      BigInt delta = factor * v;
      auto [it, inserted] = target.try_emplace(y, 0);
      it->second += delta;
      if (it->second == 0) {
        target.erase(it);
        col_rows_[y].erase(dst);
      } else if (inserted) {
        col_rows_[y].insert(dst);
      }
    }
    relength(dst, before);
  }

  void relength(std::size_t r, std::size_t before) {
    const std::size_t after = rows_[r].size();
    if (after == before) return;
    if (before) by_length_.erase({before, r});
    if (after) by_length_.emplace(after, r);
  }

  std::vector<std::map<std::size_t, BigInt>> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
  std::set<std::pair<std::size_t, std::size_t>> by_length_;
};

// Turns an arbitrary positive diagonal into the divisor chain with the same
// Smith form: (a, b) -> (gcd, lcm) pairwise on the non-unit entries.
std::vector<BigInt> divisor_chain(std::vector<BigInt> diagonal) {
  std::vector<BigInt> units;
  std::vector<BigInt> rest;
  for (auto& d : diagonal) {
    if (d == 1) {
      units.push_back(1);
    } else {
      rest.push_back(std::move(d));
    }
  }
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      BigInt g = gcd(rest[i], rest[j]);
      BigInt l = lcm(rest[i], rest[j]);
      rest[i] = g;
      rest[j] = l;
    }
  }
  // gcd steps may have produced new units at the front of `rest`.
  std::sort(rest.begin(), rest.end());
  units.insert(units.end(), rest.begin(), rest.end());
  return units;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  Workspace work(m);
  std::vector<BigInt> diagonal;
  std::size_t r = 0;
  std::size_t c = 0;
  while (work.find_pivot(r, c)) diagonal.push_back(work.eliminate(r, c));
  SmithForm out;
  out.rank = diagonal.size();
  out.invariants = divisor_chain(std::move(diagonal));
  return out;
}

}  // namespace cellstrat
