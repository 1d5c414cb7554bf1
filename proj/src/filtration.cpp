#include "ripsedge/filtration.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ripsedge {

bool filtration_less(const FilteredSimplex& a, const FilteredSimplex& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.v < b.v;
}

double selective_entry_value(const FiniteMetricSpace& X, int a, int b, int c, double lambda) {
  if (lambda <= 0.0 || lambda > 1.0)
    throw std::invalid_argument("selective_entry_value: lambda must lie in (0, 1]");
  if (a == b || a == c || b == c)
    throw std::invalid_argument("selective_entry_value: repeated vertices");
  if (a < 0 || b < 0 || c < 0 || a >= X.size() || b >= X.size() || c >= X.size())
    throw std::out_of_range("selective_entry_value: vertex index out of range");

  const double ab = X.dist(a, b), ac = X.dist(a, c), bc = X.dist(b, c);
  const double diam = std::max({ab, ac, bc});
  const double shortest = std::min({ab, ac, bc});
  return std::max(diam, shortest / lambda);
}

Filtration build_filtration(const FiniteMetricSpace& X, Convention convention,
                            std::optional<double> max_value, SelectiveParams selective) {
  if (convention == Convention::SelectiveOpen &&
      (selective.lambda <= 0.0 || selective.lambda > 1.0))
    throw std::invalid_argument("build_filtration: selective lambda must lie in (0, 1]");

  const int n = X.size();
  const double cap = max_value.value_or(std::numeric_limits<double>::infinity());

  Filtration F;
  F.space = X;
  F.convention = convention;
  F.lambda = convention == Convention::SelectiveOpen ? selective.lambda : 1.0;
  F.max_value = max_value;

  auto& simplices = F.simplices;
  for (int i = 0; i < n; ++i)
    simplices.push_back({{i, -1, -1}, 0.0, 0});

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = X.dist(i, j);
      if (d <= cap) simplices.push_back({{i, j, -1}, d, 1});
    }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double ij = X.dist(i, j);
      if (ij > cap) continue;  // the diameter already exceeds the cap
      for (int k = j + 1; k < n; ++k) {
        const double diam = std::max({ij, X.dist(i, k), X.dist(j, k)});
        double value = diam;
        if (convention == Convention::SelectiveOpen) {
          const double shortest = std::min({ij, X.dist(i, k), X.dist(j, k)});
          value = std::max(diam, shortest / F.lambda);
        }
        if (value <= cap) simplices.push_back({{i, j, k}, value, 2});
      }
    }

  std::sort(simplices.begin(), simplices.end(), filtration_less);
  return F;
}

std::vector<FilteredSimplex> complex_at(const Filtration& F, double r) {
  std::vector<FilteredSimplex> present;
  for (const auto& s : F.simplices) {
    // value-sorted, so the first absent simplex ends the complex
    if (!simplex_present(s.value, r, F.convention)) break;
    present.push_back(s);
  }
  return present;
}

}  // namespace ripsedge
