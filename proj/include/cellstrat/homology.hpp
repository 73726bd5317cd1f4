#pragma once

#include <cstddef>
#include <vector>

#include "cellstrat/delta_set.hpp"
#include "cellstrat/integer_matrix.hpp"
#include "cellstrat/numeric.hpp"

namespace cellstrat {

/// Free chain groups with boundary matrices ∂_n : C_n -> C_{n-1}.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// `boundaries[n]` must have ranks[n-1] rows and ranks[n] columns for n >= 1;
  /// boundaries[0] is ignored. Throws InvariantViolation on shape mismatch or
  /// when some ∂_n ∂_{n+1} is nonzero.
  ChainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> boundaries);

  std::size_t levels() const noexcept { return ranks_.size(); }
  std::size_t rank(std::size_t n) const noexcept { return n < ranks_.size() ? ranks_[n] : 0; }
  /// ∂_n; the zero map for n = 0 or beyond the top.
  IntegerMatrix boundary(std::size_t n) const;
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }

 private:
  std::vector<std::size_t> ranks_;
  std::vector<IntegerMatrix> boundaries_;
};

/// H_n = Z^{betti[n]} ⊕ ⊕_d Z/d for d in torsion[n].
struct HomologyResult {
  std::vector<std::size_t> betti;
  std::vector<std::vector<BigInt>> torsion;

  /// True when no group is nonzero from degree n on.
  bool trivial_from(std::size_t n) const;
  /// Degree-wise comparison treating missing trailing degrees as zero.
  bool operator==(const HomologyResult& other) const;
};

/// Simplicial chains of a Δ-set with ∂ = Σ_i (-1)^i d_i. Throws
/// ValidationError for a structurally invalid Δ-set and InvariantViolation if
/// ∂∂ ≠ 0.
ChainComplex chain_complex(const DeltaSet& d);

/// Integral homology from the Smith forms of consecutive boundaries.
HomologyResult homology(const ChainComplex& cc);

/// homology(chain_complex(d)).
HomologyResult homology(const DeltaSet& d);

/// Alternating Betti sum.
std::int64_t euler_characteristic(const HomologyResult& h);

}  // namespace cellstrat
