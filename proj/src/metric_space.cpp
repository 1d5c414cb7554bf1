#include "ripsedge/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ripsedge {

namespace {

double point_distance(const std::vector<double>& a, const std::vector<double>& b,
                      MetricKind kind) {
  double acc = 0.0;
  if (kind == MetricKind::Euclidean) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      const double d = a[k] - b[k];
      acc += d * d;
    }
    return std::sqrt(acc);
  }
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::abs(a[k] - b[k]);
  return acc;
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::from_points(const std::vector<std::vector<double>>& points,
                                                 MetricKind kind) {
  if (points.empty()) throw std::invalid_argument("from_points: empty point list");
  if (kind == MetricKind::Explicit)
    throw std::invalid_argument("from_points: Explicit kind needs a distance matrix");
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim)
      throw std::invalid_argument("from_points: points have mixed dimensions");

  FiniteMetricSpace X;
  X.n_ = static_cast<int>(points.size());
  X.coords_ = points;
  X.dist_.assign(static_cast<std::size_t>(X.n_) * X.n_, 0.0);
  for (int i = 0; i < X.n_; ++i)
    for (int j = i + 1; j < X.n_; ++j) {
      const double d = point_distance(points[i], points[j], kind);
      X.dist_[static_cast<std::size_t>(i) * X.n_ + j] = d;
      X.dist_[static_cast<std::size_t>(j) * X.n_ + i] = d;
    }
  return X;
}

FiniteMetricSpace FiniteMetricSpace::from_matrix(const std::vector<std::vector<double>>& matrix,
                                                 bool validate_triangle) {
  const std::size_t n = matrix.size();
  if (n == 0) throw std::invalid_argument("from_matrix: empty matrix");
  for (const auto& row : matrix)
    if (row.size() != n) throw std::invalid_argument("from_matrix: matrix is not square");

  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 0.0)
      throw std::invalid_argument("from_matrix: nonzero diagonal at index " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j] < 0.0)
        throw std::invalid_argument("from_matrix: negative entry at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      if (j > i && std::abs(matrix[i][j] - matrix[j][i]) > 1e-12)
        throw std::invalid_argument("from_matrix: asymmetry beyond 1e-12 at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  FiniteMetricSpace X;
  X.n_ = static_cast<int>(n);
  X.dist_.assign(n * n, 0.0);
  // Upper-triangle entries win, so the stored matrix is exactly symmetric.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      X.dist_[i * n + j] = matrix[i][j];
      X.dist_[j * n + i] = matrix[i][j];
    }

  if (validate_triangle) {
    if (auto bad = X.triangle_violation(1e-9)) {
      const auto [i, j, k] = *bad;
      throw std::invalid_argument("from_matrix: triangle inequality violated on (" +
                                  std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + ")");
    }
  }
  return X;
}

std::vector<int> FiniteMetricSpace::ball(int i, double r, bool closed) const {
  if (i < 0 || i >= n_) throw std::out_of_range("ball: point index out of range");
  std::vector<int> result;
  for (int j = 0; j < n_; ++j) {
    const double d = dist(i, j);
    if (closed ? d <= r : d < r) result.push_back(j);
  }
  return result;
}

double FiniteMetricSpace::max_distance() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) m = std::max(m, dist(i, j));
  return m;
}

double FiniteMetricSpace::min_positive_distance() const {
  double m = 0.0;
  bool found = false;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const double d = dist(i, j);
      if (d > 0.0 && (!found || d < m)) {
        m = d;
        found = true;
      }
    }
  return found ? m : 0.0;
}

std::vector<double> FiniteMetricSpace::pairwise_distances() const {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) values.push_back(dist(i, j));
  std::sort(values.begin(), values.end());
  return values;
}

std::optional<std::array<int, 3>> FiniteMetricSpace::triangle_violation(double tol) const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n_; ++k) {
        if (k == i || k == j) continue;
        if (dist(i, k) > dist(i, j) + dist(j, k) + tol)
          return std::array<int, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

void FiniteMetricSpace::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("set_labels: label count does not match point count");
  labels_ = std::move(labels);
}

}  // namespace ripsedge
