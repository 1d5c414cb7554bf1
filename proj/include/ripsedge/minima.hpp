#pragma once

#include <utility>
#include <vector>

#include "ripsedge/metric_space.hpp"

namespace ripsedge {

/// A pair (i,j), i < j, at which the distance function attains a discrete
/// local minimum with discretization radius epsilon: no pair (i',j') with
/// i' in the open epsilon-ball around i and j' in the one around j, i' != j',
/// has distance below dist(i,j). On a finite sample every pair is trivially
/// a minimum once epsilon shrinks below the sampling resolution, so epsilon
/// is always carried explicitly in outputs.
struct LocalMinimumRecord {
  int i = 0;
  int j = 0;        // i < j
  double value = 0.0;  // dist(i,j) > 0
  double epsilon = 0.0;
  bool isolated = false;  // filled once a window is chosen; see is_isolated
  int mc_group = -1;      // filled by group_mc
};

/// All epsilon-discretized local minima of the distance function, sorted by
/// value (ties by pair). Ball membership is strict (< epsilon) and defeat is
/// non-strict (a tie with a nearby pair does not disqualify a minimum).
/// Requires epsilon > 0.
std::vector<LocalMinimumRecord> eps_local_minima(const FiniteMetricSpace& X, double epsilon);

/// Records sharing a minimum value c, up to the grouping tolerance.
struct McGroup {
  double value = 0.0;  // smallest value in the group
  std::vector<std::pair<int, int>> pairs;
  int size() const { return static_cast<int>(pairs.size()); }
};

/// Single-linkage clustering of record values on the real line: consecutive
/// values at gap <= tau share a group. Stamps mc_group into the records and
/// returns the groups in ascending value order. Requires tau >= 0.
std::vector<McGroup> group_mc(std::vector<LocalMinimumRecord>& records, double tau = 1e-9);

/// True iff no record value other than c lies in (c - window, c + window).
/// Throws std::invalid_argument when c is not among the record values.
bool is_isolated(const std::vector<LocalMinimumRecord>& records, double c, double window);

struct DescentResult {
  std::pair<int, int> final_pair;
  std::vector<std::pair<int, int>> trace;  // starts with the initial pair

  int steps() const { return static_cast<int>(trace.size()) - 1; }
};

/// Greedy monotone descent: repeatedly move each endpoint by at most nu
/// (non-strict) to the candidate pair of strictly smaller distance, choosing
/// the candidate that minimizes the new distance (ties broken by
/// lexicographic pair order). Stops when no single nu-step decreases the
/// distance; the walkers may meet. The distance strictly decreases every
/// step, so at most one iteration per distinct pair distance can occur.
DescentResult descend(const FiniteMetricSpace& X, std::pair<int, int> start, double nu);

}  // namespace ripsedge
