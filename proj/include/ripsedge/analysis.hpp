#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ripsedge/minima.hpp"
#include "ripsedge/persistence.hpp"

namespace ripsedge {

/// Tolerance for matching scales against spectrum values. Event scales are
/// exact pairwise distances (or their closed-form selective images), so this
/// only absorbs representation noise.
inline constexpr double kSpectrumTol = 1e-9;

/// Outcome of the witness test for one local-minimum pair: when value c is
/// attained by a single isolated minimum pair (x,y), the scale c changes
/// persistence iff no third point sits within distance c of both x and y.
struct CriterionVerdict {
  std::pair<int, int> pair{0, 0};
  double c = 0.0;
  std::optional<int> witness;      // smallest witness index, if any
  bool predicted_in_spectrum = false;  // == !witness
  bool observed_in_spectrum = false;   // filled by verify_criterion
  bool agree = false;                  // filled by verify_criterion
};

/// Prediction half of the criterion. The hypotheses are enforced, not
/// assumed: the pair must be the unique member of its minima group and the
/// group value must be isolated within `window` among the group values;
/// otherwise std::invalid_argument is thrown, because the prediction is
/// unsound outside those hypotheses.
CriterionVerdict converse_criterion(const FiniteMetricSpace& X, double c,
                                    std::pair<int, int> pair,
                                    const std::vector<McGroup>& groups, double window);

/// Convenience overload that recomputes the minima records itself.
CriterionVerdict converse_criterion(const FiniteMetricSpace& X, double c,
                                    std::pair<int, int> pair, double epsilon,
                                    double tau, double window);

/// Verdicts for every group that satisfies the hypotheses (singleton and
/// isolated); other groups are skipped.
std::vector<CriterionVerdict> criterion_verdicts(const FiniteMetricSpace& X,
                                                 const std::vector<McGroup>& groups,
                                                 double window);

/// Observed half: c is in spectrum iff it matches an H_0 merge scale or an
/// H_1 birth scale of the barcode within kSpectrumTol. Fills observed/agree.
void verify_criterion(std::vector<CriterionVerdict>& verdicts, const Barcode& barcode);

/// Z/2 crossing number of a 1-chain with respect to disjoint vertex sets A
/// and B: the parity of the total coefficient on edges with one endpoint in
/// A and the other in B. A chain is given as an edge list; repeated edges
/// accumulate mod 2. Throws std::invalid_argument when A and B overlap or an
/// edge is degenerate/out of range.
int crossing_number(const Filtration& F,
                    std::span<const std::pair<int, int>> chain,
                    std::span<const int> A, std::span<const int> B);

/// Certificate that no 2-chain present at scale r can bound a cycle with odd
/// A-B crossing number: true iff every triangle present at r has a boundary
/// of even crossing number (crossing parity is additive over chains).
bool crossing_obstruction_certificate(const Filtration& F, double r,
                                      std::span<const int> A, std::span<const int> B);

/// Per-scale accounting of the minima-cardinality bound: at an isolated
/// minimum value c, the H_1 rank increase plus the H_0 rank drop is at most
/// the number of minimum pairs at c.
struct BoundRow {
  double scale = 0.0;
  int mc_size = 0;   // pairs in the group
  int dh1 = 0;       // H_1 rank just above c minus just below
  int dh0_drop = 0;  // component count just below c minus just above
  int slack = 0;     // mc_size - dh1 - dh0_drop
};

struct GlobalBoundRow {
  double r = 0.0;
  int h1_rank = 0;
  int bound = 0;  // model_b1 + sum of |M_c| over groups with value < r
  bool ok = false;
};

struct BoundLedger {
  std::vector<BoundRow> rows;             // one per group, ascending scale
  std::vector<GlobalBoundRow> global;     // present iff model_b1 was supplied
  bool all_nonnegative() const;
  bool global_ok() const;
};

/// Evaluates the per-scale ledger for every group and, when the model's
/// first Betti number is supplied, the cumulative rank bound
/// rank H_1(r) <= model_b1 + sum_{c < r} |M_c| at scales between and beyond
/// the group values. Every group value must be isolated within `window`
/// among the group values; a non-isolated scale throws.
BoundLedger bound_check(const Barcode& barcode, const std::vector<McGroup>& groups,
                        double window, std::optional<int> model_b1 = std::nullopt);

/// True iff the H_1 rank of the open Rips filtration equals expected_b1 at
/// 50 evenly spaced scales strictly inside (lo, hi). Requires 0 < lo < hi.
bool reconstruction_check(const FiniteMetricSpace& X, int expected_b1,
                          double lo, double hi);

struct DetectionEntry {
  int i = 0;
  int j = 0;
  double value = 0.0;
  bool h0_detected = false;  // value matches a selective H_0 merge scale
  bool h1_detected = false;  // value matches a selective H_1 birth scale
  bool detected() const { return h0_detected || h1_detected; }
};

/// For each record, whether its value shows up in the spectra of the
/// selective filtration with the given lambda (tolerance kSpectrumTol).
std::vector<DetectionEntry> selective_detection(const FiniteMetricSpace& X,
                                                const std::vector<LocalMinimumRecord>& records,
                                                double lambda);

struct ContainmentViolation {
  std::string filtration;  // "open" or "selective(<lambda>)"
  int dim = 0;             // 0: merge scale, 1: birth scale
  double scale = 0.0;
};

struct ContainmentReport {
  double epsilon = 0.0;
  int scales_checked = 0;
  std::vector<ContainmentViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks that every H_0 merge scale and every H_1 birth scale — of the open
/// filtration and of one selective filtration per supplied lambda — matches
/// some epsilon-local-minimum value within kSpectrumTol.
ContainmentReport verify_spectrum_containment(const FiniteMetricSpace& X, double epsilon,
                                              std::span<const double> selective_lambdas = {});

/// Half the smallest gap between adjacent group values; a positive fallback
/// when there are fewer than two groups. Every group is isolated w.r.t. the
/// returned window.
double isolation_window(const std::vector<McGroup>& groups);

}  // namespace ripsedge
