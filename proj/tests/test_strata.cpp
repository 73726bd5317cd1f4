#include <doctest.h>

#include <algorithm>

#include "cellstrat/category.hpp"
#include "cellstrat/css.hpp"
#include "cellstrat/homology.hpp"
#include "oracles/checks.hpp"

using namespace cellstrat;

namespace {

bool names(const ValidationReport& r, const std::string& check, const std::string& cell) {
  return std::any_of(r.begin(), r.end(), [&](const Violation& v) { return v.check == check && v.cell == cell; });
}

// Nonempty proper subsets of {0..n}, ordered by inclusion, with dim = size − 1.
std::pair<Poset, std::map<std::string, int>> simplex_boundary(int n) {
  std::vector<std::string> ids;
  std::map<std::string, int> dims;
  std::vector<unsigned> masks;
  for (unsigned mask = 1; mask + 1 < (1u << (n + 1)); ++mask) {
    std::string id;
    for (int i = 0; i <= n; ++i) {
      if (mask >> i & 1u) id += std::to_string(i);
    }
    ids.push_back(id);
    masks.push_back(mask);
    dims[id] = __builtin_popcount(mask) - 1;
  }
  std::vector<Poset::Pair> rel;
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = 0; b < masks.size(); ++b) {
      if (a != b && (masks[a] & masks[b]) == masks[a]) rel.emplace_back(ids[a], ids[b]);
    }
  }
  return {Poset(ids, rel), dims};
}

HomologyResult H(std::vector<std::size_t> betti) {
  HomologyResult h;
  h.betti = betti;
  h.torsion.assign(betti.size(), {});
  return h;
}

}  // namespace

TEST_CASE("fixtures") {
  SUBCASE("circle_min") {
    auto s = fixture("circle_min");
    CHECK(s.category().hom(*s.category().object_index("e0"), *s.category().object_index("e1")).size() == 2);
    CHECK(validate_css(s, CssMode::Closed).empty());
    auto bp = boundary_poset(s, "e1");
    CHECK(bp.poset.size() == 2);
    CHECK(bp.poset.strict_pairs().empty());
    auto d = barycentric_subdivision(s);
    CHECK(d.cell_counts() == std::vector<std::size_t>{2, 2});
    CHECK(homology(d) == H({1, 1}));
  }
  SUBCASE("punctured_torus") {
    auto s = fixture("punctured_torus");
    CHECK(validate_css(s, CssMode::General).empty());
    auto closed = validate_css(s, CssMode::Closed);
    CHECK(names(closed, "sphericity", "e1xe1"));
    auto bp = boundary_poset(s, "e1xe1");
    CHECK(bp.poset.size() == 4);
    CHECK(bp.poset.strict_pairs().empty());
    CHECK(homology(barycentric_subdivision(s)) == H({1, 2}));
  }
  SUBCASE("torus") {
    auto s = fixture("torus");
    CHECK(validate_css(s, CssMode::Closed).empty());
    auto bp = boundary_poset(s, "e1xe1");
    CHECK(bp.poset.size() == 8);
    CHECK(std::count(bp.dims.begin(), bp.dims.end(), 0) == 4);
    CHECK(homology(order_complex(bp.poset)) == H({1, 1}));
    CHECK(homology(barycentric_subdivision(s)) == H({1, 2, 1}));
  }
  SUBCASE("rp2") {
    auto s = fixture("rp2");
    CHECK(validate_css(s, CssMode::Closed).empty());
    auto bp = boundary_poset(s, "e2");
    CHECK(bp.poset.size() == 4);
    for (const char* p : {"p1", "p2"}) {
      for (const char* t : {"tau1", "tau2"}) CHECK(bp.poset.less(*bp.poset.index_of(p), *bp.poset.index_of(t)));
    }
    CHECK(homology(order_complex(bp.poset)) == H({1, 1}));
    auto h = homology(barycentric_subdivision(s));
    CHECK(h.betti == std::vector<std::size_t>{1, 0, 0});
    CHECK(h.torsion[1] == std::vector<BigInt>{2});
  }
  SUBCASE("interval_cell") {
    auto s = fixture("interval_cell");
    CHECK(validate_css(s, CssMode::General).empty());
    CHECK(barycentric_subdivision(s).cell_counts() == std::vector<std::size_t>{2, 1});
  }
  CHECK_THROWS_AS(fixture("klein_bottle"), InputError);
}

TEST_CASE("0-cells have empty boundary posets") {
  CHECK(boundary_poset(fixture("torus"), "e0xe0").poset.size() == 0);
  CHECK_THROWS_AS(boundary_poset(fixture("torus"), "nope"), InputError);
}

TEST_CASE("validate_css violations") {
  SUBCASE("dimension must increase along lifts") {
    FiniteAcyclicCategory c(CategorySpec{{"a", "b"}, {{"f", "a", "b"}}, {}});
    CHECK(names(validate_css(TotallyNormalCSS(c, {{"a", 1}, {"b", 1}}), CssMode::General), "dimension", "f"));
  }
  SUBCASE("unique factorization") {
    CategorySpec spec{{"m0", "m1", "l"},
                      {{"c1", "m0", "m1"}, {"c2", "m0", "m1"}, {"b1", "m1", "l"}, {"b0", "m0", "l"}},
                      {{"b1", "c1", "b0"}, {"b1", "c2", "b0"}}};
    TotallyNormalCSS s(FiniteAcyclicCategory(spec), {{"m0", 0}, {"m1", 1}, {"l", 2}});
    CHECK(names(validate_css(s, CssMode::General), "unique-factorization", "l"));
    CHECK(oracle::factorization_failures(s.category()) == 1);
    CHECK_THROWS_AS(barycentric_subdivision(s), ValidationError);
  }
  SUBCASE("missing dimension") {
    FiniteAcyclicCategory c(CategorySpec{{"a", "b"}, {}, {}});
    CHECK_THROWS_AS(TotallyNormalCSS(c, {{"a", 0}}), InputError);
    CHECK_THROWS_AS(TotallyNormalCSS(c, {{"a", 0}, {"b", -1}}), InputError);
  }
}

TEST_CASE("css_of_deltaset") {
  DeltaSet circle({{"v"}, {"e"}}, {{"e", {"v", "v"}}});
  auto s = css_of_deltaset(circle);
  CHECK(s.category().hom(*s.category().object_index("v"), *s.category().object_index("e")).size() == 2);
  CHECK(validate_css(s, CssMode::General).empty());
  CHECK(homology(barycentric_subdivision(s)) == homology(circle));

  DeltaSet segment({{"a", "b"}, {"ab"}}, {{"ab", {"b", "a"}}});
  auto t = css_of_deltaset(segment);
  const auto& tc = t.category();
  CHECK(tc.hom(*tc.object_index("a"), *tc.object_index("ab")).size() == 1);
  CHECK(tc.hom(*tc.object_index("b"), *tc.object_index("ab")).size() == 1);
}

TEST_CASE("css_of_regular_poset") {
  SUBCASE("point") {
    auto s = css_of_regular_poset(Poset({"x"}, {}), {{"x", 0}});
    CHECK(barycentric_subdivision(s).cell_counts() == std::vector<std::size_t>{1});
  }
  SUBCASE("boundary of the triangle") {
    auto [p, dims] = simplex_boundary(2);
    CHECK(homology(barycentric_subdivision(css_of_regular_poset(p, dims))) == H({1, 1}));
  }
  SUBCASE("boundary of the tetrahedron") {
    auto [p, dims] = simplex_boundary(3);
    auto s = css_of_regular_poset(p, dims);
    CHECK(validate_css(s, CssMode::Closed).empty());
    auto d = barycentric_subdivision(s);
    CHECK(d == order_complex(p));
    CHECK(homology(d) == H({1, 0, 1}));
  }
  SUBCASE("dimensions must increase") {
    CHECK_THROWS_AS(css_of_regular_poset(Poset({"a", "b"}, {{"a", "b"}}), {{"a", 1}, {"b", 1}}), InputError);
  }
}

TEST_CASE("Sd invariants on fixtures") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto s = fixture(name);
    auto d = barycentric_subdivision(s);
    CHECK(d.dimension() <= s.max_dimension());
    CHECK(homology(barycentric_subdivision(css_of_deltaset(d))) == homology(d));
    if (validate_css(s, CssMode::Closed).empty()) {
      CHECK(d.dimension() == s.max_dimension());
      std::int64_t chi = 0;
      for (int dim : s.dims()) chi += (dim % 2 == 0) ? 1 : -1;
      CHECK(euler_characteristic(d) == chi);
    }
  }
}
