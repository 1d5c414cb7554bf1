#pragma once

#include <limits>
#include <vector>

#include "ripsedge/filtration.hpp"

namespace ripsedge {

inline constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

/// One bar of the barcode. Under an open-threshold convention the class
/// exists exactly for scales r in (birth, death]; under ClosedRips for
/// r in [birth, death). Empty intervals (birth == death) are never stored.
struct Bar {
  int dim = 0;
  double birth = 0.0;
  double death = kInfiniteDeath;

  bool finite() const { return death != kInfiniteDeath; }
  bool operator==(const Bar&) const = default;
};

struct Barcode {
  Convention convention = Convention::OpenRips;
  std::vector<Bar> bars;  // sorted by (dim, birth, death)
};

/// Union-find over the edges for H_0 (one finite bar per merge, death at the
/// merging edge's value; one infinite bar per final component) and standard
/// left-to-right column reduction over the 2-element field for H_1 (a cycle
/// born at its creating edge's value dies at the value of the triangle paired
/// with it). Coefficients are Z/2 throughout.
Barcode compute_barcode(const Filtration& F);

/// Connected-component partition at scale r: edges with value < r (open
/// conventions) or <= r (closed). Entry i holds the smallest point index in
/// i's component, so equal vectors mean equal partitions.
std::vector<int> components_at(const Filtration& F, double r);

int component_count(const Filtration& F, double r);

/// Number of bars of the given dimension alive at scale r under the
/// barcode's endpoint convention.
int rank_at(const Barcode& B, int dim, double r);

/// Values at which union-find merges happen, in insertion order.
/// Multiset equals the finite H_0 deaths except that zero-distance merges
/// (empty bars) still appear here.
std::vector<double> merge_scales(const Filtration& F);

struct SpectrumReport {
  std::vector<double> h0_merge_scales;  // finite H_0 deaths, sorted, with multiplicity
  std::vector<double> h1_birth_scales;  // H_1 births, sorted, with multiplicity

  struct Delta {
    double scale = 0.0;
    int h0_change = 0;  // component count just above minus just below
    int h1_change = 0;  // H_1 rank just above minus just below
  };
  std::vector<Delta> deltas;  // one row per distinct event scale, ascending
};

SpectrumReport extract_spectra(const Barcode& B);

/// Checks the component description at scale r against the last merge below
/// it: the strict-threshold partition at r must equal the partition by
/// non-strict a1-sequences (edges with value <= a1). a1 must be the largest
/// merge scale below r; anything else throws std::invalid_argument.
bool a1_sequence_check(const Filtration& F, double a1, double r);

}  // namespace ripsedge
