#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cellstrat/errors.hpp"

namespace cellstrat {

/// A finite Δ-set: graded cells with face operators d_0..d_n on each n-cell.
///
/// Cells are addressed by (dimension, index). Cell ids are unique across all
/// dimensions. A DeltaSet built from ids may carry structural defects (missing
/// face targets, wrong arity); those are kept and surfaced by
/// validate_deltaset() rather than thrown.
class DeltaSet {
 public:
  static constexpr std::size_t kMissing = static_cast<std::size_t>(-1);

  DeltaSet() = default;

  /// `cells[n]` lists the ids of n-cells; `faces[id]` lists d_0..d_n targets
  /// of each cell of dimension n >= 1.
  DeltaSet(std::vector<std::vector<std::string>> cells,
           const std::map<std::string, std::vector<std::string>>& faces);

  /// Trusted construction: `faces[n][i][j]` is the index of d_j of cell i in
  /// dimension n (faces[0] is ignored). Throws InputError on duplicate ids or
  /// out-of-range indices.
  static DeltaSet from_indices(std::vector<std::vector<std::string>> cells,
                               std::vector<std::vector<std::vector<std::size_t>>> faces);

  /// Top dimension with a cell, or -1 for the empty Δ-set.
  int dimension() const noexcept;
  /// Number of graded levels stored (dimension() + 1 after trimming).
  std::size_t levels() const noexcept { return cells_.size(); }
  std::size_t size(std::size_t n) const noexcept { return n < cells_.size() ? cells_[n].size() : 0; }
  std::vector<std::size_t> cell_counts() const;

  const std::vector<std::string>& cells(std::size_t n) const { return cells_.at(n); }
  const std::string& id(std::size_t n, std::size_t i) const { return cells_.at(n).at(i); }
  /// Index of d_j applied to cell i of dimension n >= 1 (kMissing if unknown).
  std::size_t face(std::size_t n, std::size_t i, std::size_t j) const { return faces_.at(n).at(i).at(j); }
  const std::vector<std::size_t>& faces_of(std::size_t n, std::size_t i) const { return faces_.at(n).at(i); }

  std::optional<std::pair<std::size_t, std::size_t>> find(std::string_view id) const;

  const ValidationReport& structural_issues() const noexcept { return issues_; }

  /// Cell-for-cell equality: same ids per dimension in the same order and
  /// identical face indices.
  bool operator==(const DeltaSet& other) const {
    return cells_ == other.cells_ && faces_ == other.faces_;
  }

 private:
  void trim();
  void build_index();

  std::vector<std::vector<std::string>> cells_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
  std::map<std::string, std::pair<std::size_t, std::size_t>, std::less<>> index_;
  ValidationReport issues_;
};

/// Structural defects plus every failing Δ-identity d_i d_j = d_{j-1} d_i.
ValidationReport validate_deltaset(const DeltaSet& d);

/// Σ (-1)^n |cells_n|.
std::int64_t euler_characteristic(const DeltaSet& d);

}  // namespace cellstrat
