#include <doctest.h>

#include <random>

#include "cellstrat/arrangement.hpp"
#include "cellstrat/category.hpp"
#include "cellstrat/css.hpp"
#include "cellstrat/graph.hpp"
#include "cellstrat/homology.hpp"
#include "oracles/checks.hpp"
#include "oracles/orlik_solomon.hpp"
#include "oracles/random_instances.hpp"
#include "oracles/rational_rank.hpp"

using namespace cellstrat;

namespace {

// Δ-identities, ∂∂ = 0, Euler–Poincaré and SNF vs ℚ-rank on one Δ-set.
void check_complex(const DeltaSet& d) {
  CHECK(validate_deltaset(d).empty());
  CHECK(oracle::delta_identity_failures(d) == 0);
  CHECK(oracle::boundary_squares_to_zero(d));
  auto h = homology(d);
  CHECK(euler_characteristic(d) == oracle::alternating_betti(h));
  CHECK(oracle::alternating_cells(d) == oracle::alternating_betti(h));
  CHECK(h.betti == oracle::rational_betti(d));
}

void check_category(const FiniteAcyclicCategory& c) {
  CHECK(validate_category(c).empty());
  CHECK(oracle::associativity_failures(c) == 0);
}

void check_css(const TotallyNormalCSS& s) {
  CHECK(validate_css(s, CssMode::General).empty());
  check_category(s.category());
  CHECK(oracle::factorization_failures(s.category()) == 0);
}

std::vector<oracle::Hyperplane> hyperplanes(const Arrangement& a) {
  std::vector<oracle::Hyperplane> out;
  for (const auto& f : a.forms()) out.push_back({f.coefficients, f.constant});
  return out;
}

}  // namespace

TEST_CASE("property: fixtures") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto s = fixture(name);
    check_css(s);
    auto d = barycentric_subdivision(s);
    check_complex(d);
    check_css(css_of_deltaset(d));
  }
}

TEST_CASE("property: random posets") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 150; ++trial) {
    auto p = oracle::random_poset(rng);
    CAPTURE(p.size());
    auto c = poset_to_category(p);
    check_category(c);
    CHECK(underlying_poset(c) == p);
    auto d = order_complex(p);
    check_complex(d);
    CHECK(nondegenerate_nerve(c) == d);

    std::map<std::string, int> dims;
    for (std::size_t i = 0; i < p.size(); ++i) dims[p.element(i)] = static_cast<int>(p.strictly_below(i).size());
    auto s = css_of_regular_poset(p, dims);
    check_css(s);
    CHECK(barycentric_subdivision(s) == d);
  }
}

TEST_CASE("property: random categories") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    FiniteAcyclicCategory c(oracle::random_category(rng));
    CAPTURE(c.morphism_count());
    REQUIRE(c.structural_issues().empty());
    check_category(c);
    auto d = nondegenerate_nerve(c);
    check_complex(d);
    if (d.levels() <= 4) check_css(css_of_deltaset(d));
  }
}

TEST_CASE("property: random integer matrices") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = oracle::uniform(rng, 1, 7);
    const int cols = oracle::uniform(rng, 1, 7);
    const int spread = oracle::uniform(rng, 1, 40);
    std::vector<std::vector<BigInt>> dense(rows, std::vector<BigInt>(cols));
    oracle::QMatrix q(rows, std::vector<mpq_class>(cols));
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        const int v = oracle::uniform(rng, 0, 2) == 0 ? oracle::uniform(rng, -spread, spread) : 0;
        dense[r][c] = v;
        q[r][c] = v;
      }
    }
    auto snf = smith_normal_form(IntegerMatrix::from_dense(dense));
    CHECK(snf.rank == oracle::rational_rank(q));
    CHECK(snf.invariants.size() == snf.rank);
    for (std::size_t i = 0; i < snf.invariants.size(); ++i) {
      CHECK(snf.invariants[i] > 0);
      if (i > 0) CHECK(snf.invariants[i] % snf.invariants[i - 1] == 0);
    }
    if (rows == cols && snf.rank == static_cast<std::size_t>(rows)) {
      BigInt product = 1;
      for (const auto& d : snf.invariants) product *= d;
      CHECK(mpq_class(product) == abs(oracle::determinant(q)));
    }
  }
}

TEST_CASE("property: random arrangements") {
  std::mt19937_64 rng(4242);
  int built = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const bool central = trial % 2 == 0;
    auto a = oracle::random_arrangement(rng, central);
    if (!a) continue;
    ++built;
    CAPTURE(a->size());
    for (int order = 1; order <= 2; ++order) {
      CAPTURE(order);
      auto fp = enumerate_higher_faces(*a, order);
      for (const auto& f : fp.faces) {
        auto w = witness(*a, f.values, order, &rng);
        REQUIRE(w);
        CHECK(sign_vector_at(*a, *w) == f.values);
        CHECK(face_dimension(*a, f.values, order) == f.dimension);
      }
      // A random point lands in an enumerated face.
      for (int sample = 0; sample < 10; ++sample) {
        std::vector<std::vector<Rational>> levels(order, std::vector<Rational>(3));
        for (auto& level : levels) {
          for (auto& x : level) x = Rational(oracle::uniform(rng, -3, 3), oracle::uniform(rng, 1, 2));
        }
        SignVector sv{sign_vector_at(*a, levels), order, 0};
        CHECK(fp.poset.index_of(sv.id()));
      }
      auto d = order_complex(complement_subposet(fp).poset);
      check_complex(d);
    }
    HomologyResult expected;
    expected.betti = oracle::complement_betti(hyperplanes(*a), 3, 2);
    expected.torsion.assign(expected.betti.size(), {});
    CHECK(homology(salvetti(*a, 2)) == expected);
  }
  CHECK(built >= 30);
}

TEST_CASE("property: random trees") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    auto g = oracle::random_tree(rng);
    CAPTURE(g.edge_count());
    auto model = conf_face_category(g, 2);
    check_css(model.css);
    const auto& c = model.css.category();
    for (std::size_t x = 0; x < model.cells.size(); ++x) CHECK(model.cells[x].id(g) == c.object(x));

    // Composites exist and pin exactly the union of both pin sets.
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      for (std::size_t h : c.outgoing(c.morphism(f).target)) {
        auto hf = c.compose(h, f);
        REQUIRE(hf);
        PinAssignment both = model.pins[h];
        for (std::size_t t = 0; t < both.size(); ++t) {
          if (model.pins[f][t] != 0) both[t] = model.pins[f][t];
        }
        CHECK(model.pins[*hf] == both);
        auto lower = apply_pins(g, model.cells[c.morphism(h).target], both);
        REQUIRE(lower);
        CHECK(*lower == model.cells[c.morphism(f).source]);
      }
    }

    auto sd = barycentric_subdivision(model.css);
    check_complex(sd);
    auto quotient = unordered_quotient(model);
    check_complex(quotient);
    auto fine = subdivide_graph(g, 3);
    CHECK(homology(sd) == homology(order_complex(abrams_complex(fine, 2, true).poset)));
    CHECK(homology(quotient) == homology(order_complex(abrams_complex(fine, 2, false).poset)));
  }
}
