#include "cellstrat/homology.hpp"

#include <algorithm>
#include <string>

namespace cellstrat {

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  boundaries_.resize(ranks_.size());
  if (!boundaries_.empty()) boundaries_[0] = IntegerMatrix(0, ranks_[0]);
  for (std::size_t n = 1; n < ranks_.size(); ++n) {
    if (boundaries_[n].rows() != ranks_[n - 1] || boundaries_[n].cols() != ranks_[n]) {
      throw InvariantViolation("chain complex: boundary " + std::to_string(n) + " has the wrong shape");
    }
  }
  for (std::size_t n = 2; n < ranks_.size(); ++n) {
    if (!(boundaries_[n - 1] * boundaries_[n]).is_zero()) {
      throw InvariantViolation("chain complex: boundary " + std::to_string(n - 1) + " ∘ boundary " +
                               std::to_string(n) + " is nonzero");
    }
  }
}

IntegerMatrix ChainComplex::boundary(std::size_t n) const {
  if (n == 0) return IntegerMatrix(0, rank(0));
  if (n >= ranks_.size()) return IntegerMatrix(rank(n - 1), 0);
  return boundaries_[n];
}

bool HomologyResult::trivial_from(std::size_t n) const {
  for (std::size_t k = n; k < betti.size(); ++k) {
    if (betti[k] != 0) return false;
  }
  for (std::size_t k = n; k < torsion.size(); ++k) {
    if (!torsion[k].empty()) return false;
  }
  return true;
}

bool HomologyResult::operator==(const HomologyResult& other) const {
  const std::size_t n = std::max({betti.size(), other.betti.size(), torsion.size(), other.torsion.size()});
  static const std::vector<BigInt> none;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t a = k < betti.size() ? betti[k] : 0;
    std::size_t b = k < other.betti.size() ? other.betti[k] : 0;
    if (a != b) return false;
    const auto& ta = k < torsion.size() ? torsion[k] : none;
    const auto& tb = k < other.torsion.size() ? other.torsion[k] : none;
    if (ta != tb) return false;
  }
  return true;
}

ChainComplex chain_complex(const DeltaSet& d) {
  if (!d.structural_issues().empty()) {
    throw ValidationError("chain complex: Δ-set is structurally invalid", d.structural_issues());
  }
  std::vector<std::size_t> ranks = d.cell_counts();
  std::vector<IntegerMatrix> boundaries(ranks.size());
  for (std::size_t n = 1; n < ranks.size(); ++n) {
    IntegerMatrix m(ranks[n - 1], ranks[n]);
    for (std::size_t c = 0; c < ranks[n]; ++c) {
      const auto& faces = d.faces_of(n, c);
      for (std::size_t i = 0; i <= n; ++i) m.add(faces[i], c, (i % 2 == 0) ? 1 : -1);
    }
    boundaries[n] = std::move(m);
  }
  return ChainComplex(std::move(ranks), std::move(boundaries));
}

HomologyResult homology(const ChainComplex& cc) {
  const std::size_t levels = cc.levels();
  // forms[n] is the Smith form of ∂_n for n = 1..levels-1.
  std::vector<SmithForm> forms(levels + 1);
  for (std::size_t n = 1; n < levels; ++n) forms[n] = smith_normal_form(cc.boundary(n));

  HomologyResult out;
  out.betti.resize(levels);
  out.torsion.resize(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    const std::size_t rank_out = forms[n].rank;       // rank ∂_n (0 for n = 0)
    const std::size_t rank_in = forms[n + 1].rank;    // rank ∂_{n+1}
    out.betti[n] = cc.rank(n) - rank_out - rank_in;
    for (const auto& d : forms[n + 1].invariants) {
      if (d != 1) out.torsion[n].push_back(d);
    }
  }
  return out;
}

HomologyResult homology(const DeltaSet& d) { return homology(chain_complex(d)); }

std::int64_t euler_characteristic(const HomologyResult& h) {
  std::int64_t chi = 0;
  for (std::size_t n = 0; n < h.betti.size(); ++n) {
    auto b = static_cast<std::int64_t>(h.betti[n]);
    chi += (n % 2 == 0) ? b : -b;
  }
  return chi;
}

}  // namespace cellstrat
