#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ripsedge {

enum class MetricKind { Euclidean, Manhattan, Explicit };

/// A finite metric space: n points with a symmetric non-negative distance
/// matrix and zero diagonal. Coordinates, when present, are carried as
/// provenance only; every algorithm in this library reads distances
/// exclusively, so spaces built from explicit matrices are first-class.
class FiniteMetricSpace {
public:
  /// Build from coordinate vectors under a coordinate metric.
  /// Throws std::invalid_argument on empty input, mixed dimensions, or
  /// kind == Explicit.
  static FiniteMetricSpace from_points(const std::vector<std::vector<double>>& points,
                                       MetricKind kind);

  /// Build from an explicit square matrix. Asymmetric entries beyond 1e-12,
  /// negative entries, and nonzero diagonal entries are rejected. The
  /// triangle-inequality check is opt-in (O(n^3), tolerance 1e-9 absolute);
  /// a violation is reported by throwing, never repaired silently.
  static FiniteMetricSpace from_matrix(const std::vector<std::vector<double>>& matrix,
                                       bool validate_triangle = false);

  int size() const { return n_; }

  double dist(int i, int j) const {
    return dist_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(j)];
  }

  /// Indices j with dist(i,j) < r (open) or dist(i,j) <= r (closed), sorted
  /// ascending. Throws std::out_of_range for a bad index.
  std::vector<int> ball(int i, double r, bool closed = false) const;

  double max_distance() const;

  /// Smallest nonzero pairwise distance; 0 if all pairs coincide or n < 2.
  double min_positive_distance() const;

  /// All pairwise distances dist(i,j) for i < j, sorted ascending.
  std::vector<double> pairwise_distances() const;

  /// First triple (i,j,k) with dist(i,k) > dist(i,j) + dist(j,k) + tol.
  std::optional<std::array<int, 3>> triangle_violation(double tol = 1e-9) const;

  const std::vector<std::vector<double>>& coords() const { return coords_; }
  bool has_coords() const { return !coords_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

private:
  FiniteMetricSpace() = default;

  int n_ = 0;
  std::vector<double> dist_;  // row-major n x n
  std::vector<std::vector<double>> coords_;
  std::vector<std::string> labels_;
};

}  // namespace ripsedge
