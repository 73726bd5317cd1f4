#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cellstrat/delta_set.hpp"
#include "cellstrat/errors.hpp"
#include "cellstrat/poset.hpp"

namespace cellstrat {

struct MorphismSpec {
  std::string id;
  std::string src;
  std::string dst;
};

/// g ∘ f = gf
struct CompositionSpec {
  std::string g;
  std::string f;
  std::string gf;
};

/// Raw category data as read from a file; nothing is checked yet.
struct CategorySpec {
  std::vector<std::string> objects;
  std::vector<MorphismSpec> morphisms;
  std::vector<CompositionSpec> compositions;
};

/// A finite category with implicit identities: only non-identity morphisms
/// and their pairwise composites are stored.
///
/// Objects and morphisms are sorted by id and addressed by index. Construction
/// never fails on axiom violations; unresolved references and duplicates are
/// recorded as structural issues and reported by validate_category().
class FiniteAcyclicCategory {
 public:
  struct Morphism {
    std::string id;
    std::size_t source;
    std::size_t target;
  };
  struct Composition {
    std::size_t g;
    std::size_t f;
    std::size_t gf;
  };

  FiniteAcyclicCategory() = default;
  explicit FiniteAcyclicCategory(CategorySpec spec);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::string& object(std::size_t i) const { return objects_.at(i); }
  const std::vector<Morphism>& morphisms() const noexcept { return morphisms_; }
  const Morphism& morphism(std::size_t i) const { return morphisms_.at(i); }

  std::optional<std::size_t> object_index(std::string_view id) const;
  std::optional<std::size_t> morphism_index(std::string_view id) const;

  /// Non-identity morphisms x -> y, in id order.
  std::vector<std::size_t> hom(std::size_t x, std::size_t y) const;
  std::span<const std::size_t> outgoing(std::size_t x) const { return outgoing_.at(x); }
  std::span<const std::size_t> incoming(std::size_t y) const { return incoming_.at(y); }

  /// g ∘ f if listed.
  std::optional<std::size_t> compose(std::size_t g, std::size_t f) const;
  /// Listed composites, ordered by (g, f).
  const std::vector<Composition>& compositions() const noexcept { return compositions_; }

  const ValidationReport& structural_issues() const noexcept { return issues_; }

  /// Converts back to raw data (ids only).
  CategorySpec spec() const;

 private:
  static std::uint64_t key(std::size_t g, std::size_t f) {
    return (static_cast<std::uint64_t>(g) << 32) | static_cast<std::uint64_t>(f);
  }

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::map<std::string, std::size_t, std::less<>> object_index_;
  std::map<std::string, std::size_t, std::less<>> morphism_index_;
  std::vector<std::vector<std::size_t>> outgoing_;
  std::vector<std::vector<std::size_t>> incoming_;
  std::vector<Composition> compositions_;
  std::unordered_map<std::uint64_t, std::size_t> composition_index_;
  ValidationReport issues_;
};

/// Every violated axiom with witnesses: structural issues, acyclicity,
/// missing or ill-typed composites, associativity. Empty iff valid.
ValidationReport validate_category(const FiniteAcyclicCategory& c);

/// Throws ValidationError when validate_category reports anything.
void require_valid(const FiniteAcyclicCategory& c);

/// x <= y iff x = y or Hom(x, y) is nonempty.
Poset underlying_poset(const FiniteAcyclicCategory& c);

/// One morphism "a<b" per strict pair a < b.
FiniteAcyclicCategory poset_to_category(const Poset& p);

/// Nondegenerate nerve: n-cells are chains of n composable non-identity
/// morphisms. 0-cells carry object ids; n-cells carry the morphism ids joined
/// by ';'. Cells are ordered lexicographically by their id sequences.
DeltaSet nondegenerate_nerve(const FiniteAcyclicCategory& c);

/// Order complex: nondegenerate_nerve(poset_to_category(p)).
DeltaSet order_complex(const Poset& p);

}  // namespace cellstrat
