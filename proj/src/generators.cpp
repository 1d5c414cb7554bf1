#include "ripsedge/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ripsedge {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Uniform double in [0, 1) from the top 53 bits; mt19937_64 output is fully
// specified by the standard, so this stays bit-identical across platforms
// (std::uniform_real_distribution does not).
double canonical(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

FiniteMetricSpace circle_sample(int n, double radius) {
  if (n < 3) throw std::invalid_argument("circle_sample: need at least 3 points");
  if (radius <= 0.0) throw std::invalid_argument("circle_sample: radius must be positive");
  std::vector<std::vector<double>> points;
  points.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * kPi * k / n;
    points.push_back({radius * std::cos(angle), radius * std::sin(angle)});
  }
  return FiniteMetricSpace::from_points(points, MetricKind::Euclidean);
}

FiniteMetricSpace ladder_space(int rungs, double gap, double height) {
  if (rungs < 2) throw std::invalid_argument("ladder_space: need at least 2 rungs");
  if (gap <= 0.0 || height <= 0.0)
    throw std::invalid_argument("ladder_space: gap and height must be positive");
  if (gap * (rungs - 1) >= height)
    throw std::invalid_argument(
        "ladder_space: rail diameter gap*(rungs-1) must stay below the rung height");
  std::vector<std::vector<double>> points;
  points.reserve(2 * rungs);
  for (int j = 0; j < rungs; ++j) points.push_back({gap * j, 0.0});
  for (int j = 0; j < rungs; ++j) points.push_back({gap * j, height});
  return FiniteMetricSpace::from_points(points, MetricKind::Manhattan);
}

FiniteMetricSpace witness_triangle(double c, double h) {
  if (c <= 0.0 || h <= 0.0)
    throw std::invalid_argument("witness_triangle: c and h must be positive");
  if (std::sqrt(0.25 * c * c + h * h) >= c)
    throw std::invalid_argument("witness_triangle: apex too far, needs sqrt((c/2)^2+h^2) < c");
  return FiniteMetricSpace::from_points({{0.0, 0.0}, {c, 0.0}, {0.5 * c, h}},
                                        MetricKind::Euclidean);
}

FiniteMetricSpace cluster_sample(const std::vector<ClusterSpec>& specs, std::uint64_t seed) {
  if (specs.empty()) throw std::invalid_argument("cluster_sample: no clusters given");
  const std::size_t dim = specs.front().center.size();
  for (const auto& s : specs) {
    if (s.center.size() != dim)
      throw std::invalid_argument("cluster_sample: cluster centers have mixed dimensions");
    if (s.count < 1) throw std::invalid_argument("cluster_sample: cluster count must be >= 1");
    if (s.spread < 0.0) throw std::invalid_argument("cluster_sample: spread must be >= 0");
  }

  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> points;
  for (const auto& s : specs)
    for (int p = 0; p < s.count; ++p) {
      std::vector<double> point(dim);
      for (std::size_t k = 0; k < dim; ++k)
        point[k] = s.center[k] + (2.0 * canonical(rng) - 1.0) * s.spread;
      points.push_back(std::move(point));
    }
  return FiniteMetricSpace::from_points(points, MetricKind::Euclidean);
}

}  // namespace ripsedge
