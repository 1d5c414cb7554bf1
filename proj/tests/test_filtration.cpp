#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "ripsedge/bruteforce.hpp"
#include "ripsedge/filtration.hpp"
#include "ripsedge/generators.hpp"
#include "ripsedge/harness.hpp"

using namespace ripsedge;

namespace {

FiniteMetricSpace unit_square() {
  return FiniteMetricSpace::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                                        MetricKind::Euclidean);
}

FiniteMetricSpace equilateral() {
  return FiniteMetricSpace::from_matrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

int count_dim(const std::vector<FilteredSimplex>& simplices, int dim) {
  int count = 0;
  for (const auto& s : simplices) count += s.dim == dim;
  return count;
}

}  // namespace

TEST_CASE("unit square filtration values") {
  const auto F = build_filtration(unit_square(), Convention::OpenRips);
  const double diag = std::sqrt(2.0);

  int sides = 0, diagonals = 0, triangles_at_diag = 0;
  for (const auto& s : F.simplices) {
    if (s.dim == 1) {
      if (s.value == 1.0) ++sides;
      if (s.value == doctest::Approx(diag).epsilon(1e-14)) ++diagonals;
    }
    if (s.dim == 2) {
      CHECK(s.value == doctest::Approx(diag).epsilon(1e-14));
      ++triangles_at_diag;
    }
  }
  CHECK(sides == 4);
  CHECK(diagonals == 2);
  CHECK(triangles_at_diag == 4);
}

TEST_CASE("strict versus non-strict membership") {
  const auto X = equilateral();

  const auto open = build_filtration(X, Convention::OpenRips);
  CHECK(count_dim(complex_at(open, 1.0), 1) == 0);

  const auto closed = build_filtration(X, Convention::ClosedRips);
  const auto present = complex_at(closed, 1.0);
  CHECK(count_dim(present, 1) == 3);
  CHECK(count_dim(present, 2) == 1);
}

TEST_CASE("complex_at boundary cases") {
  const auto two = FiniteMetricSpace::from_matrix({{0, 1}, {1, 0}});
  const auto F = build_filtration(two, Convention::OpenRips);
  CHECK(complex_at(F, 0.0).empty());

  const auto at = complex_at(F, 1.5);
  CHECK(count_dim(at, 0) == 2);
  CHECK(count_dim(at, 1) == 1);

  const auto square = build_filtration(unit_square(), Convention::OpenRips);
  const auto at_diag = complex_at(square, std::sqrt(2.0));
  CHECK(count_dim(at_diag, 0) == 4);
  CHECK(count_dim(at_diag, 1) == 4);  // the diagonals are excluded by strictness
  CHECK(count_dim(at_diag, 2) == 0);
}

TEST_CASE("filtration order is valid") {
  const auto spaces = {circle_sample(10, 1.0), ladder_space(4, 0.04, 1.0),
                       harness::random_planar_space(99, 12)};
  for (const auto& X : spaces) {
    for (auto convention : {Convention::OpenRips, Convention::SelectiveOpen}) {
      const auto F = build_filtration(X, convention, std::nullopt, {0.5});
      std::set<std::array<int, 3>> seen;
      double prev_value = -1.0;
      int prev_dim = 0;
      for (const auto& s : F.simplices) {
        CHECK(s.value >= prev_value);
        if (s.value == prev_value) CHECK(s.dim >= prev_dim);
        prev_value = s.value;
        prev_dim = s.dim;
        if (s.dim == 1) {
          CHECK(seen.count({s.v[0], -1, -1}));
          CHECK(seen.count({s.v[1], -1, -1}));
        } else if (s.dim == 2) {
          CHECK(seen.count({s.v[0], s.v[1], -1}));
          CHECK(seen.count({s.v[0], s.v[2], -1}));
          CHECK(seen.count({s.v[1], s.v[2], -1}));
        }
        seen.insert(s.v);
      }
    }
  }
}

TEST_CASE("monotonicity and face closure of complex_at") {
  const auto X = harness::random_planar_space(123, 10);
  const auto F = build_filtration(X, Convention::OpenRips);
  const double top = X.max_distance() * 1.1;

  std::vector<FilteredSimplex> previous;
  for (double r = 0.0; r <= top; r += top / 17.0) {
    const auto present = complex_at(F, r);

    std::set<std::array<int, 3>> keys;
    for (const auto& s : present) keys.insert(s.v);
    for (const auto& s : previous) CHECK(keys.count(s.v));  // monotone in r

    for (const auto& s : present) {
      if (s.dim == 1) {
        CHECK(keys.count({s.v[0], -1, -1}));
        CHECK(keys.count({s.v[1], -1, -1}));
      } else if (s.dim == 2) {
        CHECK(keys.count({s.v[0], s.v[1], -1}));
        CHECK(keys.count({s.v[0], s.v[2], -1}));
        CHECK(keys.count({s.v[1], s.v[2], -1}));
      }
    }
    previous = present;
  }
}

TEST_CASE("selective entry values") {
  const auto X = equilateral();
  CHECK(selective_entry_value(X, 0, 1, 2, 1.0) == 1.0);

  const auto W = witness_triangle(1.0, 0.3);
  CHECK(selective_entry_value(W, 0, 1, 2, 0.4) ==
        doctest::Approx(std::sqrt(0.34) / 0.4).epsilon(1e-14));

  // a thin triangle is unaffected when shortest/lambda <= diameter
  const auto thin =
      FiniteMetricSpace::from_matrix({{0, 1, 1}, {1, 0, 0.1}, {1, 0.1, 0}});
  CHECK(selective_entry_value(thin, 0, 1, 2, 0.5) == 1.0);

  CHECK_THROWS_AS(selective_entry_value(X, 0, 0, 2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(selective_entry_value(X, 0, 1, 2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(selective_entry_value(X, 0, 1, 2, 1.5), std::invalid_argument);
}

TEST_CASE("selective complexes nest inside plain ones") {
  const auto X = harness::random_planar_space(5, 9);
  const auto plain = build_filtration(X, Convention::OpenRips);

  for (double lambda : {0.3, 0.6, 1.0}) {
    const auto sel = build_filtration(X, Convention::SelectiveOpen, std::nullopt, {lambda});
    const double top = X.max_distance() * 1.2;
    for (double r = top / 7.0; r <= 3.0 * top; r += top / 7.0) {
      const auto inner = complex_at(sel, r);
      std::set<std::array<int, 3>> outer;
      for (const auto& s : complex_at(plain, r)) outer.insert(s.v);
      for (const auto& s : inner) CHECK(outer.count(s.v));
    }
  }

  // lambda = 1 reproduces the plain filtration exactly
  const auto sel1 = build_filtration(X, Convention::SelectiveOpen, std::nullopt, {1.0});
  REQUIRE(sel1.simplices.size() == plain.simplices.size());
  for (std::size_t k = 0; k < plain.simplices.size(); ++k) {
    CHECK(sel1.simplices[k].v == plain.simplices[k].v);
    CHECK(sel1.simplices[k].value == plain.simplices[k].value);
  }
}

TEST_CASE("selective membership matches the cover enumeration") {
  std::mt19937_64 seed_rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + static_cast<int>(seed_rng() % 5);  // 4..8
    const auto X = harness::random_planar_space(seed_rng(), n);
    for (double lambda : {0.35, 0.7, 1.0}) {
      const auto F = build_filtration(X, Convention::SelectiveOpen, std::nullopt, {lambda});
      const double top = X.max_distance();
      for (double r : {0.2 * top, 0.6 * top, 1.01 * top, 2.5 * top}) {
        for (const auto& s : F.simplices) {
          if (s.dim != 2) continue;
          const bool via_value = simplex_present(s.value, r, Convention::SelectiveOpen);
          const bool via_cover = bruteforce::selective_triangle_member(
              X, s.v[0], s.v[1], s.v[2], r, lambda * r);
          CHECK(via_value == via_cover);
        }
      }
    }
  }
}

TEST_CASE("max_value truncates the filtration") {
  const auto X = unit_square();
  const auto F = build_filtration(X, Convention::OpenRips, 1.2);
  for (const auto& s : F.simplices) CHECK(s.value <= 1.2);
  CHECK(count_dim(F.simplices, 1) == 4);  // diagonals fall beyond the cap
  CHECK(count_dim(F.simplices, 2) == 0);
}
