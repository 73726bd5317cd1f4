#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cellstrat {

/// A finite poset on string ids. Elements are kept in lexicographic order and
/// addressed by index into that order. Reflexive pairs are implicit.
class Poset {
 public:
  using Pair = std::pair<std::string, std::string>;

  Poset() = default;

  /// `relation` lists pairs (a, b) meaning a <= b. It must already be
  /// transitive; reflexive pairs may be listed or omitted. Throws InputError
  /// on unknown ids, duplicate elements, antisymmetry or transitivity failures.
  Poset(std::vector<std::string> elements, const std::vector<Pair>& relation);

  /// Builds the poset generated by `covers` (transitive closure is taken).
  static Poset from_covers(std::vector<std::string> elements, const std::vector<Pair>& covers);

  /// Index-based construction. `strict_above[i]` lists j with i < j; checked
  /// like the string constructor. `elements` must be sorted and unique.
  static Poset from_indices(std::vector<std::string> elements,
                            std::vector<std::vector<std::size_t>> strict_above);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& element(std::size_t i) const { return elements_.at(i); }
  std::optional<std::size_t> index_of(std::string_view id) const;

  bool less(std::size_t a, std::size_t b) const;
  bool leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }

  std::span<const std::size_t> strictly_above(std::size_t i) const { return above_.at(i); }
  std::span<const std::size_t> strictly_below(std::size_t i) const { return below_.at(i); }

  /// All strict pairs a < b, ordered by (a, b) index.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;
  /// Cover pairs a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  std::vector<std::size_t> maximal_elements() const;

  /// Subposet induced on the elements for which `keep` is true.
  template <class Pred>
  Poset induced(Pred keep) const {
    std::vector<std::size_t> old_to_new(size(), npos);
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < size(); ++i) {
      if (keep(i)) {
        old_to_new[i] = kept.size();
        kept.push_back(elements_[i]);
      }
    }
    std::vector<std::vector<std::size_t>> above(kept.size());
    for (std::size_t i = 0; i < size(); ++i) {
      if (old_to_new[i] == npos) continue;
      for (std::size_t j : above_[i]) {
        if (old_to_new[j] != npos) above[old_to_new[i]].push_back(old_to_new[j]);
      }
    }
    return from_indices(std::move(kept), std::move(above));
  }

  bool operator==(const Poset& other) const {
    return elements_ == other.elements_ && above_ == other.above_;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  void finish();  // sorts adjacency, fills below_, checks the axioms

  std::vector<std::string> elements_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::vector<std::size_t>> above_;
  std::vector<std::vector<std::size_t>> below_;
};

}  // namespace cellstrat
