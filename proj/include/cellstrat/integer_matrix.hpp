#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cellstrat/numeric.hpp"

namespace cellstrat {

/// Sparse integer matrix stored by columns; each column is a row-sorted list
/// of nonzero entries.
class IntegerMatrix {
 public:
  using Entry = std::pair<std::size_t, BigInt>;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static IntegerMatrix from_dense(const std::vector<std::vector<BigInt>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  /// Adds `value` to entry (r, c).
  void add(std::size_t r, std::size_t c, const BigInt& value);
  BigInt at(std::size_t r, std::size_t c) const;

  const std::vector<Entry>& column(std::size_t c) const { return columns_.at(c); }
  std::size_t nonzeros() const noexcept;
  bool is_zero() const noexcept { return nonzeros() == 0; }

  std::vector<std::vector<BigInt>> to_dense() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  bool operator==(const IntegerMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

/// Diagonal invariants d_1 | d_2 | ... | d_r (all positive) and r, the rank
/// over the rationals.
struct SmithForm {
  std::vector<BigInt> invariants;
  std::size_t rank = 0;
};

/// Smith normal form by unimodular row/column operations with exact
/// arithmetic. Pivots on a nonzero entry of least absolute value.
SmithForm smith_normal_form(const IntegerMatrix& m);

}  // namespace cellstrat
