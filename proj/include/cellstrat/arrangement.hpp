#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cellstrat/delta_set.hpp"
#include "cellstrat/linear_system.hpp"
#include "cellstrat/poset.hpp"

namespace cellstrat {

/// A real affine hyperplane arrangement with rational defining forms.
class Arrangement {
 public:
  /// Throws InputError for forms of the wrong dimension, identically zero
  /// forms, and forms that define the same hyperplane as an earlier one.
  Arrangement(std::size_t dimension, std::vector<AffineForm> forms);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return forms_.size(); }
  const std::vector<AffineForm>& forms() const noexcept { return forms_; }
  const AffineForm& form(std::size_t i) const { return forms_.at(i); }

 private:
  std::size_t dimension_;
  std::vector<AffineForm> forms_;
};

/// Value of the order-ℓ sign function: 0, or ±j for ±e_j (1 <= j <= ℓ).
/// For ℓ = 1 this is the ordinary sign.
using SignValue = int;

/// 0 < ±e_1 < ... < ±e_ℓ, with ±e_j incomparable to each other.
constexpr bool sign_leq(SignValue a, SignValue b) {
  return a == b || (a < 0 ? -a : a) < (b < 0 ? -b : b);
}

/// A realizable (higher) sign vector together with the dimension of its face.
struct SignVector {
  std::vector<SignValue> values;
  int order = 1;
  int dimension = 0;

  /// "+0-" for order 1, "+e2,0,-e1" otherwise.
  std::string id() const;
  bool has_zero() const;
};

/// Pointwise comparison in S_ℓ.
bool sign_leq(const SignVector& a, const SignVector& b);

/// Parses an id produced by SignVector::id(). Throws InputError.
std::vector<SignValue> parse_sign_id(const std::string& id, int order);

/// Realizable (higher) sign vectors ordered pointwise. `faces[i]` belongs to
/// poset element i (elements are the sign ids, lexicographically sorted).
struct FacePoset {
  int order = 1;
  std::vector<SignVector> faces;
  Poset poset;
};

/// The level-j system of a higher sign vector over one copy of R^n:
/// ℓ_i = 0 where the value is 0 or ±e_{j'} with j' < j (coordinates above the
/// last nonzero one vanish), sign(ℓ_i) = s where the value is s·e_j, nothing
/// where j' > j. Only the first `prefix` hyperplanes
/// are constrained.
LinearSystem level_system(const Arrangement& a, std::span<const SignValue> values, int level,
                          std::size_t prefix);

/// Whether every level system of `values` is feasible.
bool realizable(const Arrangement& a, std::span<const SignValue> values, int order);

/// Σ_j (n - rank of the level-j equalities); assumes realizability.
int face_dimension(const Arrangement& a, std::span<const SignValue> values, int order);

/// Face poset of the stratification of R^n by `a`.
FacePoset enumerate_faces(const Arrangement& a);

/// Face poset of the order-ℓ stratification of R^n ⊗ R^ℓ.
FacePoset enumerate_higher_faces(const Arrangement& a, int order);

/// Induced subposet on sign vectors with no zero entry.
FacePoset complement_subposet(const FacePoset& fp);

/// Order complex of the complement face poset of order ℓ.
DeltaSet salvetti(const Arrangement& a, int order);

/// x_i = x_j for 1 <= i < j <= k in R^k.
Arrangement braid_arrangement(int k);

/// Order-ℓ sign vector of a point of R^n ⊗ R^ℓ given as ℓ points of R^n.
std::vector<SignValue> sign_vector_at(const Arrangement& a, std::span<const std::vector<Rational>> levels);

/// One rational point per level that realizes `values`, or nullopt.
std::optional<std::vector<std::vector<Rational>>> witness(const Arrangement& a, std::span<const SignValue> values,
                                                          int order, std::mt19937_64* rng = nullptr);

}  // namespace cellstrat
