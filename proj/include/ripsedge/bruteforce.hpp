#pragma once

#include "ripsedge/filtration.hpp"

namespace ripsedge::bruteforce {

// Independent homology oracle: builds the full boundary matrices of the
// complex present at a scale and runs dense Gaussian elimination over the
// 2-element field. Shares no code with the union-find / column-reduction
// path it cross-checks.

struct BettiNumbers {
  int b0 = 0;
  int b1 = 0;
};

BettiNumbers betti_at(const Filtration& F, double r);

/// Literal two-subset cover test from the selective-complex definition:
/// true iff the triangle {a,b,c} has diameter < r1 and some assignment of
/// its vertices to two groups keeps both group diameters < r2. Enumerates
/// all assignments; no closed form involved.
bool selective_triangle_member(const FiniteMetricSpace& X, int a, int b, int c,
                               double r1, double r2);

}  // namespace ripsedge::bruteforce
