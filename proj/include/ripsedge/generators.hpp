#pragma once

#include <cstdint>
#include <vector>

#include "ripsedge/metric_space.hpp"

namespace ripsedge {

/// n >= 3 equally spaced points on a planar circle, Euclidean chord metric.
FiniteMetricSpace circle_sample(int n, double radius);

/// Two parallel rails of k points each under the Manhattan metric: lower
/// points (gap*j, 0) and upper points (gap*j, height), j = 0..k-1. Rung
/// pairs sit at distance exactly `height`; cross pairs at height + gap*|j-m|.
/// Requires k >= 2 and 0 < gap*(k-1) < height so the rails stay tight
/// relative to the rungs. Lower points get indices 0..k-1, upper k..2k-1.
FiniteMetricSpace ladder_space(int rungs, double gap, double height);

/// Three Euclidean points x=(0,0), y=(c,0), z=(c/2,h). Requires
/// sqrt((c/2)^2 + h^2) < c so z sits within distance c of both x and y.
FiniteMetricSpace witness_triangle(double c, double h);

struct ClusterSpec {
  std::vector<double> center;
  int count = 1;
  double spread = 0.0;
};

/// Deterministic pseudo-random clusters: each point is its cluster center
/// plus per-coordinate offsets drawn uniformly from [-spread, spread].
/// Same seed, same clusters => bit-identical output.
FiniteMetricSpace cluster_sample(const std::vector<ClusterSpec>& specs, std::uint64_t seed);

}  // namespace ripsedge
