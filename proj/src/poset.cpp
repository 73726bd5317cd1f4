#include "cellstrat/poset.hpp"

#include <algorithm>

#include "cellstrat/errors.hpp"

namespace cellstrat {
namespace {

std::map<std::string, std::size_t, std::less<>> build_index(const std::vector<std::string>& elements) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], i).second) {
      throw InputError("poset: duplicate element '" + elements[i] + "'");
    }
  }
  return index;
}

}  // namespace

Poset::Poset(std::vector<std::string> elements, const std::vector<Pair>& relation) {
  std::sort(elements.begin(), elements.end());
  elements_ = std::move(elements);
  index_ = build_index(elements_);
  above_.assign(elements_.size(), {});
  for (const auto& [a, b] : relation) {
    auto ia = index_of(a);
    auto ib = index_of(b);
    if (!ia || !ib) {
      throw InputError("poset: relation (" + a + ", " + b + ") names an unknown element");
    }
    if (*ia != *ib) above_[*ia].push_back(*ib);
  }
  finish();
}

Poset Poset::from_covers(std::vector<std::string> elements, const std::vector<Pair>& covers) {
  std::sort(elements.begin(), elements.end());
  auto index = build_index(elements);
  const std::size_t n = elements.size();
  std::vector<std::vector<std::size_t>> up(n);
  for (const auto& [a, b] : covers) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw InputError("poset: cover (" + a + ", " + b + ") names an unknown element");
    }
    if (ia->second != ib->second) up[ia->second].push_back(ib->second);
  }
  // Transitive closure by DFS from every element; a cycle back to the start
  // violates antisymmetry and is caught in finish().
  std::vector<std::vector<std::size_t>> above(n);
  std::vector<char> seen(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<std::size_t> stack(up[s].begin(), up[s].end());
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      if (seen[x]) continue;
      seen[x] = 1;
      above[s].push_back(x);
      for (std::size_t y : up[x]) {
        if (!seen[y]) stack.push_back(y);
      }
    }
  }
  return from_indices(std::move(elements), std::move(above));
}

Poset Poset::from_indices(std::vector<std::string> elements,
                          std::vector<std::vector<std::size_t>> strict_above) {
  if (!std::is_sorted(elements.begin(), elements.end())) {
    throw InputError("poset: elements must be sorted for index construction");
  }
  if (strict_above.size() != elements.size()) {
    throw InputError("poset: adjacency size does not match element count");
  }
  Poset p;
  p.elements_ = std::move(elements);
  p.index_ = build_index(p.elements_);
  p.above_ = std::move(strict_above);
  for (const auto& row : p.above_) {
    for (std::size_t j : row) {
      if (j >= p.elements_.size()) throw InputError("poset: adjacency index out of range");
    }
  }
  p.finish();
  return p;
}

void Poset::finish() {
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto& row = above_[i];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    if (std::binary_search(row.begin(), row.end(), i)) {
      row.erase(std::lower_bound(row.begin(), row.end(), i));
    }
  }
  below_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : above_[i]) below_[j].push_back(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : above_[i]) {
      if (less(j, i)) {
        throw InputError("poset: antisymmetry fails for '" + elements_[i] + "' and '" +
                         elements_[j] + "'");
      }
      for (std::size_t k : above_[j]) {
        if (k != i && !less(i, k)) {
          throw InputError("poset: transitivity fails for '" + elements_[i] + "' <= '" +
                           elements_[j] + "' <= '" + elements_[k] + "'");
        }
      }
    }
  }
}

std::optional<std::size_t> Poset::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Poset::less(std::size_t a, std::size_t b) const {
  const auto& row = above_.at(a);
  return std::binary_search(row.begin(), row.end(), b);
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : above_[i]) out.emplace_back(i, j);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b : above_[a]) {
      bool between = std::any_of(above_[a].begin(), above_[a].end(),
                                 [&](std::size_t c) { return c != b && less(c, b); });
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (above_[i].empty()) out.push_back(i);
  }
  return out;
}

}  // namespace cellstrat
