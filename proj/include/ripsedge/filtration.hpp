#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ripsedge/metric_space.hpp"

namespace ripsedge {

/// Scale-membership convention of a filtration.
///
/// OpenRips:      a simplex with entry value v is present at scale r iff v < r.
/// ClosedRips:    present iff v <= r.
/// SelectiveOpen: open-threshold convention; triangles additionally must be
///                splittable into two parts of diameter < lambda*r, which
///                folds into the entry value (see selective_entry_value).
enum class Convention { OpenRips, ClosedRips, SelectiveOpen };

struct SelectiveParams {
  double lambda = 1.0;  // second radius as a fraction of the scale: r2(r) = lambda*r
  static constexpr int subset_count = 1;  // simplices split into subset_count+1 parts
};

struct FilteredSimplex {
  std::array<int, 3> v{-1, -1, -1};  // strictly increasing vertex indices; unused = -1
  double value = 0.0;                // entry scale
  int dim = 0;                       // |vertices| - 1

  bool operator==(const FilteredSimplex&) const = default;
};

/// Filtration order: value ascending, then dimension, then vertex tuple.
/// Ensures faces never sort after their cofaces.
bool filtration_less(const FilteredSimplex& a, const FilteredSimplex& b);

inline bool simplex_present(double value, double r, Convention c) {
  return c == Convention::ClosedRips ? value <= r : value < r;
}

/// The filtered 2-skeleton of a finite metric space under one convention.
/// Immutable once built; safe to share across threads.
struct Filtration {
  FiniteMetricSpace space;
  Convention convention = Convention::OpenRips;
  double lambda = 1.0;  // meaningful for SelectiveOpen only
  std::optional<double> max_value;
  std::vector<FilteredSimplex> simplices;  // sorted by filtration_less

  int n_points() const { return space.size(); }
};

/// Entry scale of the triangle {a,b,c} in the selective family
/// {sRips(X; r, 1, lambda*r)}: max(diameter, shortest side / lambda).
/// A 3-point set splits into two parts of diameter < r2 exactly when its
/// shortest side is < r2, so the triangle is present iff r exceeds both the
/// diameter and shortest_side/lambda. Edges and vertices always split into
/// singletons and keep their plain entry values.
/// Throws std::invalid_argument on repeated vertices or lambda outside (0,1].
double selective_entry_value(const FiniteMetricSpace& X, int a, int b, int c, double lambda);

/// Enumerate the complete filtered 2-skeleton (vertices at value 0, edges at
/// their distance, triangles at their convention-dependent entry value),
/// sorted into filtration order. max_value, when given, keeps only simplices
/// with value <= max_value.
Filtration build_filtration(const FiniteMetricSpace& X, Convention convention,
                            std::optional<double> max_value = std::nullopt,
                            SelectiveParams selective = {});

/// Simplices present at scale r under the filtration's convention.
/// The result is face-closed for every r.
std::vector<FilteredSimplex> complex_at(const Filtration& F, double r);

}  // namespace ripsedge
