#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ripsedge/generators.hpp"
#include "ripsedge/harness.hpp"
#include "ripsedge/minima.hpp"

using namespace ripsedge;

namespace {

FiniteMetricSpace unit_square() {
  return FiniteMetricSpace::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                                        MetricKind::Euclidean);
}

bool has_record(const std::vector<LocalMinimumRecord>& records, int i, int j, double value) {
  for (const auto& rec : records)
    if (rec.i == i && rec.j == j && std::abs(rec.value - value) <= 1e-12) return true;
  return false;
}

}  // namespace

TEST_CASE("two points form a single minimum") {
  const auto X = FiniteMetricSpace::from_matrix({{0, 1}, {1, 0}});
  for (double eps : {0.1, 0.5, 3.0}) {
    const auto records = eps_local_minima(X, eps);
    REQUIRE(records.size() == 1);
    CHECK(records[0].i == 0);
    CHECK(records[0].j == 1);
    CHECK(records[0].value == 1.0);
    CHECK(records[0].epsilon == eps);
  }
  CHECK_THROWS_AS(eps_local_minima(X, 0.0), std::invalid_argument);
}

TEST_CASE("collinear triple at 0, 1, 1.2") {
  const auto X =
      FiniteMetricSpace::from_points({{0}, {1}, {1.2}}, MetricKind::Euclidean);
  const auto records = eps_local_minima(X, 0.5);
  REQUIRE(records.size() == 2);
  CHECK(has_record(records, 1, 2, 0.2));
  CHECK(has_record(records, 0, 1, 1.0));
  CHECK_FALSE(has_record(records, 0, 2, 1.2));  // defeated by the pair (0,1)
  // sorted by value
  CHECK(records[0].value == doctest::Approx(0.2));
  CHECK(records[1].value == 1.0);
}

TEST_CASE("unit square minima depend on epsilon") {
  const auto X = unit_square();
  const double diag = std::sqrt(2.0);

  // balls are singletons: every pair survives
  const auto fine = eps_local_minima(X, 0.5);
  REQUIRE(fine.size() == 6);
  int at_one = 0, at_diag = 0;
  for (const auto& rec : fine) {
    if (rec.value == 1.0) ++at_one;
    if (rec.value == doctest::Approx(diag)) ++at_diag;
  }
  CHECK(at_one == 4);
  CHECK(at_diag == 2);

  // wider balls let the sides defeat the diagonals
  const auto coarse = eps_local_minima(X, 1.1);
  REQUIRE(coarse.size() == 4);
  for (const auto& rec : coarse) CHECK(rec.value == 1.0);
}

TEST_CASE("group_mc clusters by value") {
  const auto X = unit_square();
  auto records = eps_local_minima(X, 0.5);
  const auto groups = group_mc(records, 0.0);
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].value == 1.0);
  CHECK(groups[0].size() == 4);
  CHECK(groups[1].value == doctest::Approx(std::sqrt(2.0)));
  CHECK(groups[1].size() == 2);
  for (const auto& rec : records) {
    REQUIRE(rec.mc_group >= 0);
    CHECK(groups[rec.mc_group].value <= rec.value);
  }
}

TEST_CASE("group_mc tolerance merges near ties") {
  std::vector<LocalMinimumRecord> records{{0, 1, 1.0, 0.1, false, -1},
                                          {2, 3, 1.0000001, 0.1, false, -1}};
  auto loose = records;
  CHECK(group_mc(loose, 1e-6).size() == 1);
  auto tight = records;
  CHECK(group_mc(tight, 1e-9).size() == 2);
  CHECK_THROWS_AS(group_mc(records, -1.0), std::invalid_argument);
}

TEST_CASE("is_isolated windows") {
  const auto X = unit_square();
  auto records = eps_local_minima(X, 0.5);
  CHECK(is_isolated(records, 1.0, 0.3));
  CHECK_FALSE(is_isolated(records, 1.0, 0.5));
  CHECK_THROWS_AS(is_isolated(records, 1.23, 0.3), std::invalid_argument);

  std::vector<LocalMinimumRecord> single{{0, 1, 2.0, 0.1, false, -1}};
  CHECK(is_isolated(single, 2.0, 100.0));
}

TEST_CASE("descent fixed point on two points") {
  const auto X = FiniteMetricSpace::from_matrix({{0, 1}, {1, 0}});
  const auto result = descend(X, {0, 1}, 0.4);
  CHECK(result.trace.size() == 1);
  CHECK(result.final_pair == std::pair{0, 1});
  CHECK_THROWS_AS(descend(X, {0, 0}, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(descend(X, {0, 1}, 0.0), std::invalid_argument);
}

TEST_CASE("antipodal circle walkers meet") {
  const auto X = circle_sample(12, 1.0);
  const auto result = descend(X, {0, 6}, 0.6);
  CHECK(X.dist(result.final_pair.first, result.final_pair.second) == 0.0);
  for (std::size_t t = 1; t < result.trace.size(); ++t)
    CHECK(X.dist(result.trace[t].first, result.trace[t].second) < 2.0);
}

TEST_CASE("ladder diagonal pair descends to a rung") {
  const auto X = ladder_space(6, 0.04, 1.0);
  CHECK(X.dist(0, 11) == doctest::Approx(1.2));
  const auto result = descend(X, {0, 11}, 0.05);
  const auto [a, b] = result.final_pair;
  CHECK(X.dist(a, b) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b - a == 6);  // same rung index on both rails
}

TEST_CASE("descent traces obey the step contract") {
  const FiniteMetricSpace spaces[] = {circle_sample(9, 1.0),
                                      harness::random_planar_space(31, 15),
                                      ladder_space(4, 0.04, 1.0)};
  for (const auto& X : spaces) {
    const long long n = X.size();
    for (int i = 0; i < X.size(); ++i)
      for (int j = i + 1; j < X.size(); j += 2) {
        const double nu = 0.4 * X.max_distance();
        const auto result = descend(X, {i, j}, nu);
        CHECK(result.steps() <= n * n);
        double prev = X.dist(i, j);
        for (std::size_t t = 1; t < result.trace.size(); ++t) {
          const auto [pa, pb] = result.trace[t - 1];
          const auto [a, b] = result.trace[t];
          CHECK(X.dist(pa, a) <= nu);
          CHECK(X.dist(pb, b) <= nu);
          CHECK(X.dist(a, b) < prev);
          prev = X.dist(a, b);
        }
      }
  }
}

TEST_CASE("descent lands at or below the last minimum under the start") {
  // discrete shadow of the descent property: read the minima at
  // discretization nu; a start whose distance is not itself a minimum value
  // must descend to at most the largest minimum value below it
  struct Setup {
    FiniteMetricSpace space;
    double nu;
  };
  const Setup setups[] = {
      {circle_sample(12, 1.0), 0.6},
      {cluster_sample({{{0, 0}, 6, 0.2}, {{4, 0}, 6, 0.2}, {{0, 5}, 5, 0.2}}, 11), 0.6},
  };
  for (const auto& [X, nu] : setups) {
    const auto records = eps_local_minima(X, nu);
    auto is_minimum_value = [&records](double v) {
      for (const auto& rec : records)
        if (std::abs(rec.value - v) <= 1e-12) return true;
      return false;
    };
    for (int i = 0; i < X.size(); ++i)
      for (int j = i + 1; j < X.size(); ++j) {
        const double start = X.dist(i, j);
        if (start <= 0.0) continue;
        const auto result = descend(X, {i, j}, nu);
        const double final_dist =
            X.dist(result.final_pair.first, result.final_pair.second);
        if (is_minimum_value(start)) {
          CHECK(final_dist <= start);
          continue;
        }
        double largest_below = 0.0;
        for (const auto& rec : records)
          if (rec.value < start) largest_below = std::max(largest_below, rec.value);
        CHECK(final_dist <= largest_below + 1e-12);
      }
  }
}
