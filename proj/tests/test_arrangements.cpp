#include <doctest.h>

#include <random>

#include "cellstrat/arrangement.hpp"
#include "cellstrat/category.hpp"
#include "cellstrat/homology.hpp"
#include "cellstrat/linear_system.hpp"
#include "oracles/counting.hpp"
#include "oracles/orlik_solomon.hpp"

using namespace cellstrat;

namespace {

AffineForm form(std::vector<long> a, long c) {
  AffineForm f;
  for (long x : a) f.coefficients.emplace_back(x);
  f.constant = c;
  return f;
}

Arrangement point() { return Arrangement(1, {form({1}, 0)}); }

std::vector<std::size_t> dims_histogram(const FacePoset& fp) {
  std::vector<std::size_t> h;
  for (const auto& f : fp.faces) {
    if (h.size() <= static_cast<std::size_t>(f.dimension)) h.resize(f.dimension + 1, 0);
    ++h[f.dimension];
  }
  return h;
}

std::vector<oracle::Hyperplane> hyperplanes(const Arrangement& a) {
  std::vector<oracle::Hyperplane> out;
  for (const auto& f : a.forms()) out.push_back({f.coefficients, f.constant});
  return out;
}

}  // namespace

TEST_CASE("feasibility") {
  std::vector<AffineForm> none;
  std::vector<AffineForm> eq{form({1}, 0)};
  CHECK(feasible(eq, none, 1));

  std::vector<AffineForm> both{form({1}, 0), form({-1}, 0)};
  CHECK_FALSE(feasible(none, both, 1));

  LinearSystem s(2);
  s.add_zero(form({1, -1}, 0));
  s.add_positive(form({1, 0}, 0));
  s.add_positive(form({0, 1}, -1));
  auto p = s.find_point();
  REQUIRE(p);
  CHECK((*p)[0] == (*p)[1]);
  CHECK((*p)[1] > 1);
}

TEST_CASE("feasibility distinguishes strict from weak") {
  LinearSystem weak(1);
  weak.add_nonnegative(form({1}, 0));
  weak.add_nonnegative(form({-1}, 0));
  CHECK(weak.feasible());

  LinearSystem strict(1);
  strict.add_positive(form({1}, 0));
  strict.add_nonnegative(form({-1}, 0));
  CHECK_FALSE(strict.feasible());

  LinearSystem inconsistent(2);
  inconsistent.add_zero(form({1, 1}, 0));
  inconsistent.add_zero(form({1, 1}, -1));
  CHECK_FALSE(inconsistent.feasible());
}

TEST_CASE("witness points satisfy their systems") {
  std::mt19937_64 rng(7);
  LinearSystem s(3);
  s.add_positive(form({1, 1, 0}, -2));
  s.add_positive(form({-1, 0, 1}, 0));
  s.add_nonnegative(form({0, -1, 0}, 3));
  s.add_zero(form({1, -1, 1}, 0));
  for (int trial = 0; trial < 20; ++trial) {
    auto p = s.find_point(&rng);
    REQUIRE(p);
    for (const auto& c : s.constraints()) {
      const Rational v = c.form(*p);
      if (c.relation == Relation::Zero) CHECK(v == 0);
      if (c.relation == Relation::Positive) CHECK(v > 0);
      if (c.relation == Relation::NonNegative) CHECK(v >= 0);
    }
  }
}

TEST_CASE("Arrangement rejects bad forms") {
  CHECK_THROWS_AS(Arrangement(2, {form({1}, 0)}), InputError);
  CHECK_THROWS_AS(Arrangement(1, {form({0}, 0)}), InputError);
  CHECK_THROWS_AS(Arrangement(1, {form({1}, 1), form({2}, 2)}), InputError);
}

TEST_CASE("enumerate_faces") {
  auto one = enumerate_faces(point());
  CHECK(one.faces.size() == 3);
  CHECK(dims_histogram(one) == std::vector<std::size_t>{1, 2});

  auto braid = enumerate_faces(braid_arrangement(3));
  CHECK(braid.faces.size() == 13);
  CHECK(dims_histogram(braid) == std::vector<std::size_t>{0, 1, 6, 6});

  auto parallel = enumerate_faces(Arrangement(1, {form({1}, 0), form({1}, -1)}));
  CHECK(parallel.faces.size() == 5);
  for (const auto& f : parallel.faces) CHECK(f.id() != "00");
}

TEST_CASE("higher order faces of a point") {
  auto fp = enumerate_higher_faces(point(), 2);
  REQUIRE(fp.faces.size() == 5);
  for (const auto& f : fp.faces) {
    CAPTURE(f.id());
    const int level = f.values[0] < 0 ? -f.values[0] : f.values[0];
    CHECK(f.dimension == level);
  }
  auto zero = *fp.poset.index_of("0");
  auto e1 = *fp.poset.index_of("+e1");
  auto e2 = *fp.poset.index_of("-e2");
  CHECK(fp.poset.less(zero, e1));
  CHECK(fp.poset.less(e1, e2));
  CHECK_FALSE(fp.poset.less(*fp.poset.index_of("+e1"), *fp.poset.index_of("-e1")));
}

TEST_CASE("order one agrees with enumerate_faces") {
  for (const auto& a : {point(), braid_arrangement(3), Arrangement(2, {form({1, 0}, 0), form({0, 1}, -1)})}) {
    auto lhs = enumerate_higher_faces(a, 1);
    auto rhs = enumerate_faces(a);
    CHECK(lhs.poset == rhs.poset);
  }
}

TEST_CASE("braid face counts match ordered set partitions") {
  for (int k = 2; k <= 4; ++k) {
    for (int order = 1; order <= (k < 4 ? 3 : 2); ++order) {
      CAPTURE(k);
      CAPTURE(order);
      auto fp = enumerate_higher_faces(braid_arrangement(k), order);
      CHECK(fp.faces.size() == oracle::braid_faces(k, order));
      CHECK(complement_subposet(fp).faces.size() == oracle::braid_complement_faces(k, order));
    }
  }
  CHECK(oracle::braid_faces(3, 1) == 13);
  CHECK(oracle::braid_complement_faces(3, 2) == 24);
  CHECK(oracle::braid_complement_faces(4, 1) == 24);
}

TEST_CASE("complement_subposet") {
  auto c = complement_subposet(enumerate_higher_faces(point(), 2));
  CHECK(c.faces.size() == 4);
  CHECK(c.poset.strict_pairs().size() == 4);
  auto chambers = complement_subposet(enumerate_faces(point()));
  CHECK(chambers.faces.size() == 2);
  CHECK(chambers.poset.strict_pairs().empty());
}

TEST_CASE("salvetti") {
  auto circle = salvetti(point(), 2);
  CHECK(circle.cell_counts() == std::vector<std::size_t>{4, 4});
  CHECK(homology(circle).betti == std::vector<std::size_t>{1, 1});

  auto b2 = homology(salvetti(braid_arrangement(3), 2));
  CHECK(b2.betti == std::vector<std::size_t>{1, 3, 2});
  CHECK(b2.trivial_from(3));
  auto b3 = homology(salvetti(braid_arrangement(3), 3));
  CHECK(b3.betti == std::vector<std::size_t>{1, 0, 3, 0, 2});
  for (const auto& t : b3.torsion) CHECK(t.empty());
}

TEST_CASE("Orlik–Solomon oracle") {
  auto braid = hyperplanes(braid_arrangement(3));
  CHECK(oracle::poincare_polynomial(braid, 3) == std::vector<std::int64_t>{1, 3, 2});
  CHECK(oracle::complement_betti(braid, 3, 2) == std::vector<std::size_t>{1, 3, 2});
  CHECK(oracle::complement_betti(braid, 3, 3) == std::vector<std::size_t>{1, 0, 3, 0, 2});
  CHECK(oracle::poincare_polynomial(hyperplanes(braid_arrangement(4)), 4) == std::vector<std::int64_t>{1, 6, 11, 6});
}

TEST_CASE("Salvetti homology matches the Orlik–Solomon oracle") {
  std::vector<Arrangement> cases{point(), braid_arrangement(3),
                                 Arrangement(1, {form({1}, 0), form({1}, -1)}),
                                 Arrangement(2, {form({1, 0}, 0), form({0, 1}, 0), form({1, 1}, -1)}),
                                 Arrangement(2, {form({1, 0}, 0), form({0, 1}, 0)})};
  for (const auto& a : cases) {
    for (int order = 2; order <= 3; ++order) {
      CAPTURE(a.size());
      CAPTURE(order);
      auto h = homology(salvetti(a, order));
      HomologyResult expected;
      expected.betti = oracle::complement_betti(hyperplanes(a), a.dimension(), order);
      expected.torsion.assign(expected.betti.size(), {});
      CHECK(h == expected);
    }
  }
}

TEST_CASE("braid_arrangement") {
  CHECK(braid_arrangement(2).size() == 1);
  CHECK(braid_arrangement(2).dimension() == 2);
  CHECK(braid_arrangement(3).size() == 3);
  auto b4 = braid_arrangement(4);
  CHECK(b4.size() == 6);
  CHECK(complement_subposet(enumerate_faces(b4)).faces.size() == 24);
}

TEST_CASE("sign ids round-trip") {
  for (int order : {1, 2, 3}) {
    for (const auto& f : enumerate_higher_faces(braid_arrangement(3), order).faces) {
      CHECK(parse_sign_id(f.id(), order) == f.values);
    }
  }
  CHECK_THROWS_AS(parse_sign_id("+e4", 3), InputError);
}
