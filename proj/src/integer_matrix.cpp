#include "cellstrat/integer_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cellstrat {

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<BigInt>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0) m.columns_[c].emplace_back(r, rows[r][c]);
    }
  }
  return m;
}

void IntegerMatrix::add(std::size_t r, std::size_t c, const BigInt& value) {
  if (r >= rows_ || c >= columns_.size()) throw std::out_of_range("IntegerMatrix::add");
  if (value == 0) return;
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    it->second += value;
    if (it->second == 0) col.erase(it);
  } else {
    col.insert(it, Entry{r, value});
  }
}

BigInt IntegerMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return 0;
}

std::size_t IntegerMatrix::nonzeros() const noexcept {
  std::size_t total = 0;
  for (const auto& col : columns_) total += col.size();
  return total;
}

std::vector<std::vector<BigInt>> IntegerMatrix::to_dense() const {
  std::vector<std::vector<BigInt>> out(rows_, std::vector<BigInt>(cols(), 0));
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : columns_[c]) out[r][c] = v;
  }
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntegerMatrix: shape mismatch in product");
  IntegerMatrix out(a.rows(), b.cols());
  std::vector<BigInt> acc(a.rows());
  std::vector<std::size_t> touched;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    touched.clear();
    for (const auto& [k, bv] : b.column(c)) {
      for (const auto& [r, av] : a.column(k)) {
        if (acc[r] == 0) touched.push_back(r);
        acc[r] += av * bv;
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t r : touched) {
      if (acc[r] != 0) out.columns_[c].emplace_back(r, acc[r]);
      acc[r] = 0;
    }
  }
  return out;
}

}  // namespace cellstrat
