#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "cellstrat/numeric.hpp"

namespace cellstrat {

/// Affine 1-form x ↦ ⟨coefficients, x⟩ + constant over Q.
struct AffineForm {
  std::vector<Rational> coefficients;
  Rational constant;

  std::size_t dimension() const noexcept { return coefficients.size(); }
  Rational operator()(std::span<const Rational> x) const;
  AffineForm operator-() const;
  bool is_constant() const;

  bool operator==(const AffineForm&) const = default;
};

enum class Relation { Zero, Positive, NonNegative };

struct Constraint {
  AffineForm form;
  Relation relation;
};

/// A conjunction of affine constraints over Q^dimension.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t dimension) : dimension_(dimension) {}

  /// Throws std::invalid_argument on a dimension mismatch.
  void add(AffineForm form, Relation relation);
  void add_zero(AffineForm form) { add(std::move(form), Relation::Zero); }
  void add_positive(AffineForm form) { add(std::move(form), Relation::Positive); }
  void add_nonnegative(AffineForm form) { add(std::move(form), Relation::NonNegative); }

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }

  /// Exact decision by Gaussian elimination of the equalities followed by
  /// Fourier–Motzkin elimination tracking strictness.
  bool feasible() const { return solve(nullptr).has_value(); }

  /// A point satisfying every constraint. With `rng`, free choices inside
  /// each variable's feasible interval are randomized.
  std::optional<std::vector<Rational>> find_point(std::mt19937_64* rng = nullptr) const { return solve(rng); }

 private:
  std::optional<std::vector<Rational>> solve(std::mt19937_64* rng) const;

  std::size_t dimension_;
  std::vector<Constraint> constraints_;
};

/// ∃x: every form in `equalities` vanishes and every form in `strict_positive`
/// is positive.
bool feasible(std::span<const AffineForm> equalities, std::span<const AffineForm> strict_positive,
              std::size_t dimension);

/// Rank over Q of the linear parts of `forms`.
std::size_t linear_rank(std::span<const AffineForm> forms);

}  // namespace cellstrat
