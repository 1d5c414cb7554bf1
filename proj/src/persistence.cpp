#include "ripsedge/persistence.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "ripsedge/union_find.hpp"

namespace ripsedge {

namespace {

bool bar_less(const Bar& a, const Bar& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.birth != b.birth) return a.birth < b.birth;
  return a.death < b.death;
}

// Symmetric difference of two ascending index lists (column addition mod 2).
std::vector<int> xor_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) out.push_back(a[i++]);
    else if (b[j] < a[i]) out.push_back(b[j++]);
    else { ++i; ++j; }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

std::vector<int> canonical_labels(UnionFind& uf, int n) {
  std::vector<int> smallest(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = uf.find(i);
    if (smallest[root] == -1) smallest[root] = i;  // first hit is the minimum
  }
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = smallest[uf.find(i)];
  return labels;
}

}  // namespace

Barcode compute_barcode(const Filtration& F) {
  const int n = F.n_points();
  Barcode B;
  B.convention = F.convention;

  UnionFind uf(n);
  const auto edge_key = [n](int a, int b) {
    return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(b);
  };

  std::unordered_map<std::uint64_t, int> edge_ordinal;  // (a,b) -> position among edges
  std::vector<double> edge_value;
  std::vector<char> edge_creates_cycle;
  std::unordered_map<int, std::vector<int>> reduced_by_pivot;
  std::vector<Bar> bars;

  // Single pass in filtration order; faces sort before cofaces, so every
  // edge ordinal exists by the time a triangle needs it.
  for (const auto& s : F.simplices) {
    if (s.dim == 0) continue;

    if (s.dim == 1) {
      const int ord = static_cast<int>(edge_value.size());
      edge_ordinal.emplace(edge_key(s.v[0], s.v[1]), ord);
      edge_value.push_back(s.value);
      if (uf.unite(s.v[0], s.v[1])) {
        edge_creates_cycle.push_back(0);
        if (s.value != 0.0) bars.push_back({0, 0.0, s.value});
        // a merge at value 0 spans an empty interval and leaves no bar
      } else {
        edge_creates_cycle.push_back(1);
      }
      continue;
    }

    std::vector<int> column{edge_ordinal.at(edge_key(s.v[0], s.v[1])),
                            edge_ordinal.at(edge_key(s.v[0], s.v[2])),
                            edge_ordinal.at(edge_key(s.v[1], s.v[2]))};
    std::sort(column.begin(), column.end());
    while (!column.empty()) {
      auto it = reduced_by_pivot.find(column.back());
      if (it == reduced_by_pivot.end()) break;
      column = xor_sorted(column, it->second);
    }
    if (column.empty()) continue;  // bounds nothing new in dimension 1

    const int pivot = column.back();
    assert(edge_creates_cycle[pivot] && "reduced column must pivot at a cycle edge");
    const double birth = edge_value[pivot];
    if (birth != s.value) bars.push_back({1, birth, s.value});
    reduced_by_pivot.emplace(pivot, std::move(column));
  }

  for (int c = uf.count(); c > 0; --c) bars.push_back({0, 0.0, kInfiniteDeath});
  for (std::size_t e = 0; e < edge_value.size(); ++e)
    if (edge_creates_cycle[e] && !reduced_by_pivot.contains(static_cast<int>(e)))
      bars.push_back({1, edge_value[e], kInfiniteDeath});

  std::sort(bars.begin(), bars.end(), bar_less);
  B.bars = std::move(bars);
  return B;
}

std::vector<int> components_at(const Filtration& F, double r) {
  const int n = F.n_points();
  UnionFind uf(n);
  for (const auto& s : F.simplices) {
    if (!simplex_present(s.value, r, F.convention)) break;
    if (s.dim == 1) uf.unite(s.v[0], s.v[1]);
  }
  return canonical_labels(uf, n);
}

int component_count(const Filtration& F, double r) {
  const int n = F.n_points();
  UnionFind uf(n);
  for (const auto& s : F.simplices) {
    if (!simplex_present(s.value, r, F.convention)) break;
    if (s.dim == 1) uf.unite(s.v[0], s.v[1]);
  }
  return uf.count();
}

int rank_at(const Barcode& B, int dim, double r) {
  int count = 0;
  for (const auto& bar : B.bars) {
    if (bar.dim != dim) continue;
    const bool alive = B.convention == Convention::ClosedRips
                           ? (bar.birth <= r && r < bar.death)
                           : (bar.birth < r && r <= bar.death);
    if (alive) ++count;
  }
  return count;
}

std::vector<double> merge_scales(const Filtration& F) {
  UnionFind uf(F.n_points());
  std::vector<double> scales;
  for (const auto& s : F.simplices)
    if (s.dim == 1 && uf.unite(s.v[0], s.v[1])) scales.push_back(s.value);
  return scales;
}

SpectrumReport extract_spectra(const Barcode& B) {
  SpectrumReport report;
  std::map<double, SpectrumReport::Delta> deltas;
  auto delta_at = [&deltas](double scale) -> SpectrumReport::Delta& {
    auto [it, inserted] = deltas.try_emplace(scale);
    if (inserted) it->second.scale = scale;
    return it->second;
  };

  for (const auto& bar : B.bars) {
    if (bar.dim == 0) {
      delta_at(bar.birth).h0_change += 1;
      if (bar.finite()) {
        report.h0_merge_scales.push_back(bar.death);
        delta_at(bar.death).h0_change -= 1;
      }
    } else if (bar.dim == 1) {
      report.h1_birth_scales.push_back(bar.birth);
      delta_at(bar.birth).h1_change += 1;
      if (bar.finite()) delta_at(bar.death).h1_change -= 1;
    }
  }

  std::sort(report.h0_merge_scales.begin(), report.h0_merge_scales.end());
  std::sort(report.h1_birth_scales.begin(), report.h1_birth_scales.end());
  report.deltas.reserve(deltas.size());
  for (const auto& [scale, delta] : deltas) report.deltas.push_back(delta);
  return report;
}

bool a1_sequence_check(const Filtration& F, double a1, double r) {
  constexpr double tol = 1e-9;
  const auto merges = merge_scales(F);

  bool a1_is_merge = false;
  for (double m : merges) {
    if (std::abs(m - a1) <= tol) a1_is_merge = true;
    if (m > a1 + tol && m < r)
      throw std::invalid_argument(
          "a1_sequence_check: a merge scale lies strictly between a1 and r (a1 is not the "
          "largest merge scale below r)");
  }
  if (!a1_is_merge)
    throw std::invalid_argument("a1_sequence_check: a1 = " + std::to_string(a1) +
                                " is not a merge scale");
  if (!(a1 < r))
    throw std::invalid_argument("a1_sequence_check: requires a1 < r");

  // strict-threshold partition at r
  const auto strict_partition = components_at(F, r);

  // non-strict a1-sequence partition
  UnionFind uf(F.n_points());
  for (const auto& s : F.simplices) {
    if (s.value > a1) break;
    if (s.dim == 1) uf.unite(s.v[0], s.v[1]);
  }
  return strict_partition == canonical_labels(uf, F.n_points());
}

}  // namespace ripsedge
