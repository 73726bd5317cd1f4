#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cellstrat/category.hpp"
#include "cellstrat/delta_set.hpp"
#include "cellstrat/errors.hpp"
#include "cellstrat/poset.hpp"

namespace cellstrat {

/// Combinatorial encoding of a finite totally normal cellular stratified
/// space: the face category (cells as objects, lifts of cell structure maps as
/// morphisms) together with cell dimensions.
class TotallyNormalCSS {
 public:
  TotallyNormalCSS() = default;
  /// Throws InputError if some object has no dimension, a dimension is
  /// negative, or `dims` names an unknown object.
  TotallyNormalCSS(FiniteAcyclicCategory category, const std::map<std::string, int>& dims);

  const FiniteAcyclicCategory& category() const noexcept { return category_; }
  int dim(std::size_t object) const { return dims_.at(object); }
  int dim(std::string_view object) const;
  const std::vector<int>& dims() const noexcept { return dims_; }
  std::map<std::string, int> dim_map() const;
  /// -1 for the empty space.
  int max_dimension() const noexcept;

 private:
  FiniteAcyclicCategory category_;
  std::vector<int> dims_;
};

/// Lifts into a cell λ ordered by factorization through each other.
/// Element ids are the morphism ids; `dims[i]` is the dimension of the source
/// cell of element i of `poset`.
struct BoundaryPoset {
  std::string cell;
  Poset poset;
  std::vector<int> dims;
  std::vector<std::size_t> morphisms;
};

/// Throws InputError for an unknown cell, or if the factorization order fails
/// the poset axioms.
BoundaryPoset boundary_poset(const TotallyNormalCSS& s, std::string_view cell);

enum class CssMode { General, Closed };

/// General mode: category axioms, dimension monotonicity, unique
/// factorization and boundary-poset well-formedness. Closed mode adds purity,
/// the diamond condition and homological sphericity of every boundary.
ValidationReport validate_css(const TotallyNormalCSS& s, CssMode mode);

/// The closed-mode checks for a single cell (purity, diamond, sphericity).
ValidationReport closed_cell_violations(const TotallyNormalCSS& s, std::size_t cell);

/// Sd(X) = nerve of the face category. Throws ValidationError if the general
/// checks fail.
DeltaSet barycentric_subdivision(const TotallyNormalCSS& s);

/// The stratification of |X| by the simplices of a Δ-set: Hom(τ, σ) is the
/// set of proper strictly increasing maps u: [m] -> [n] whose iterated face
/// sends σ to τ. Morphism ids read "σ[u_0,...,u_m]".
TotallyNormalCSS css_of_deltaset(const DeltaSet& d);

/// Regular case: one morphism per strict pair. Throws InputError unless
/// a < b implies dim(a) < dim(b).
TotallyNormalCSS css_of_regular_poset(const Poset& p, const std::map<std::string, int>& dims);

/// Built-in examples: circle_min, punctured_torus, torus, rp2, interval_cell.
TotallyNormalCSS fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace cellstrat
