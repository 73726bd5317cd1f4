#include "cellstrat/delta_set.hpp"

#include <string>

namespace cellstrat {

DeltaSet::DeltaSet(std::vector<std::vector<std::string>> cells,
                   const std::map<std::string, std::vector<std::string>>& faces)
    : cells_(std::move(cells)) {
  for (std::size_t n = 0; n < cells_.size(); ++n) {
    for (std::size_t i = 0; i < cells_[n].size(); ++i) {
      if (!index_.emplace(cells_[n][i], std::make_pair(n, i)).second) {
        issues_.push_back({"duplicate-id", cells_[n][i], "cell id appears more than once"});
      }
    }
  }
  faces_.assign(cells_.size(), {});
  for (std::size_t n = 1; n < cells_.size(); ++n) {
    faces_[n].assign(cells_[n].size(), std::vector<std::size_t>(n + 1, kMissing));
    for (std::size_t i = 0; i < cells_[n].size(); ++i) {
      const std::string& cell = cells_[n][i];
      auto it = faces.find(cell);
      if (it == faces.end()) {
        issues_.push_back({"missing-faces", cell, "no face list for a cell of dimension " + std::to_string(n)});
        continue;
      }
      if (it->second.size() != n + 1) {
        issues_.push_back({"face-arity", cell,
                           "expected " + std::to_string(n + 1) + " faces, got " +
                               std::to_string(it->second.size())});
      }
      for (std::size_t j = 0; j < std::min(n + 1, it->second.size()); ++j) {
        const std::string& target = it->second[j];
        auto found = find(target);
        if (!found) {
          issues_.push_back({"unknown-face", cell, "d_" + std::to_string(j) + " targets missing id '" + target + "'"});
        } else if (found->first != n - 1) {
          issues_.push_back({"face-dimension", cell,
                             "d_" + std::to_string(j) + " targets '" + target + "' of dimension " +
                                 std::to_string(found->first)});
        } else {
          faces_[n][i][j] = found->second;
        }
      }
    }
  }
  for (const auto& [cell, list] : faces) {
    auto found = find(cell);
    if (!found) {
      issues_.push_back({"unknown-cell", cell, "face list given for an undeclared cell"});
    } else if (found->first == 0 && !list.empty()) {
      issues_.push_back({"face-arity", cell, "0-cells have no faces"});
    }
  }
  trim();
}

DeltaSet DeltaSet::from_indices(std::vector<std::vector<std::string>> cells,
                                std::vector<std::vector<std::vector<std::size_t>>> faces) {
  DeltaSet d;
  d.cells_ = std::move(cells);
  d.faces_ = std::move(faces);
  d.faces_.resize(d.cells_.size());
  if (!d.faces_.empty()) d.faces_[0].clear();
  for (std::size_t n = 1; n < d.cells_.size(); ++n) {
    if (d.faces_[n].size() != d.cells_[n].size()) {
      throw InputError("delta set: face table size mismatch in dimension " + std::to_string(n));
    }
    for (const auto& f : d.faces_[n]) {
      if (f.size() != n + 1) throw InputError("delta set: wrong face arity");
      for (std::size_t t : f) {
        if (t >= d.cells_[n - 1].size()) throw InputError("delta set: face index out of range");
      }
    }
  }
  d.build_index();
  d.trim();
  return d;
}

void DeltaSet::build_index() {
  index_.clear();
  for (std::size_t n = 0; n < cells_.size(); ++n) {
    for (std::size_t i = 0; i < cells_[n].size(); ++i) {
      if (!index_.emplace(cells_[n][i], std::make_pair(n, i)).second) {
        throw InputError("delta set: duplicate cell id '" + cells_[n][i] + "'");
      }
    }
  }
}

void DeltaSet::trim() {
  while (!cells_.empty() && cells_.back().empty()) {
    cells_.pop_back();
    faces_.pop_back();
  }
}

int DeltaSet::dimension() const noexcept { return static_cast<int>(cells_.size()) - 1; }

std::vector<std::size_t> DeltaSet::cell_counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : cells_) out.push_back(level.size());
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> DeltaSet::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ValidationReport validate_deltaset(const DeltaSet& d) {
  ValidationReport report = d.structural_issues();
  for (std::size_t n = 2; n < d.levels(); ++n) {
    for (std::size_t c = 0; c < d.size(n); ++c) {
      const auto& f = d.faces_of(n, c);
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          std::size_t dj = f[j];
          std::size_t di = f[i];
          if (dj == DeltaSet::kMissing || di == DeltaSet::kMissing) continue;
          std::size_t lhs = d.face(n - 1, dj, i);
          std::size_t rhs = d.face(n - 1, di, j - 1);
          if (lhs == DeltaSet::kMissing || rhs == DeltaSet::kMissing) continue;
          if (lhs != rhs) {
            report.push_back({"delta-identity", d.id(n, c),
                              "d_" + std::to_string(i) + " d_" + std::to_string(j) + " = '" +
                                  d.id(n - 2, lhs) + "' but d_" + std::to_string(j - 1) + " d_" +
                                  std::to_string(i) + " = '" + d.id(n - 2, rhs) + "'"});
          }
        }
      }
    }
  }
  return report;
}

std::int64_t euler_characteristic(const DeltaSet& d) {
  std::int64_t chi = 0;
  for (std::size_t n = 0; n < d.levels(); ++n) {
    auto count = static_cast<std::int64_t>(d.size(n));
    chi += (n % 2 == 0) ? count : -count;
  }
  return chi;
}

}  // namespace cellstrat
