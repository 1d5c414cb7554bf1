#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ripsedge/metric_space.hpp"

namespace ripsedge::harness {

/// Discretization radius derived from the sample: half the smallest gap
/// between distinct pairwise-distance values (falling back to half the
/// smallest positive distance when all values coincide). Any pair able to
/// defeat an event scale is itself within one gap of it, so the discrete
/// minima set contains every pair relevant to the spectra.
double suggested_epsilon(const FiniteMetricSpace& X);

/// Seeded planar point set with n points uniform in the unit square,
/// resampled until all pairwise distances are pairwise separated (no ties,
/// including near-ties that the default grouping tolerance would merge).
FiniteMetricSpace random_planar_space(std::uint64_t seed, int n);

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

struct CheckResult {
  std::string name;
  long long instances = 0;
  long long checks = 0;
  long long violations = 0;
  std::string worst;  // description of the first/worst failure, empty if none
  double seconds = 0.0;

  bool ok() const { return violations == 0; }
};

struct SuiteOptions {
  int trials = 200;        // instance count for the main random suites
  int small_trials = 50;   // instance count for the oracle/descent/partition suites
  std::uint64_t seed = 7;
  int n_min = 5;
  int n_max = 30;
  int jobs = 1;            // worker threads for the random-instance suites
  std::vector<double> lambdas{0.3, 0.5, 1.0};
};

// Individual checks. Each runs self-contained and reports violations rather
// than throwing, so a full suite always produces a complete summary.

/// Witness-test equivalence on random general-position planar sets: for
/// every minima group meeting the hypotheses, prediction == observation.
CheckResult check_criterion_equivalence(const SuiteOptions& opt);

/// Every H_0 merge scale and H_1 birth scale (open and selective filtrations)
/// lies among the epsilon-local-minima values, on fixtures and random sets.
CheckResult check_spectrum_containment(const SuiteOptions& opt);

/// Unit square regression: exact bars in both dimensions.
CheckResult check_square_barcode();

/// Two-rail regression: H_1 rank k-1 at scale 1.02 for k = 2..8, matching
/// the elimination oracle; the rank grows without bound in k.
CheckResult check_ladder_rank_growth();

/// witness_triangle(1, 0.3): no H_1 bar in the plain filtration; exactly one
/// bar (1, sqrt(0.34)/0.4] under lambda = 0.4; detection report agrees.
CheckResult check_selective_witness_detection();

/// Ledger slack >= 0 everywhere; square slack at scale 1 is exactly 0;
/// cumulative rank bound holds on fixtures with known model Betti numbers.
CheckResult check_bound_slack(const SuiteOptions& opt);

/// circle_sample(200, 1): H_0 and H_1 ranks both exactly 1 at 50 scales
/// inside (0.1, 0.5).
CheckResult check_reconstruction_circle();

/// rank_at against dense Gaussian elimination on random spaces with n <= 7,
/// 20 scales each, both dimensions, exact.
CheckResult check_homology_oracle(const SuiteOptions& opt);

/// Descent trace properties (step size <= nu, strict decrease, termination
/// within n^2 steps) plus the pinned circle/ladder descents.
CheckResult check_descent_properties(const SuiteOptions& opt);

/// a1_sequence_check holds for every consecutive pair of merge scales and
/// beyond the last one, on fixtures and random instances.
CheckResult check_merge_partition(const SuiteOptions& opt);

struct SuiteSummary {
  std::vector<CheckResult> results;
  bool ok() const {
    for (const auto& r : results)
      if (!r.ok()) return false;
    return true;
  }
};

/// Runs every check above with shared options.
SuiteSummary run_verification_suite(const SuiteOptions& opt = {});

}  // namespace ripsedge::harness
