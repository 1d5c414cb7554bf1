#include "ripsedge/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ripsedge {

namespace {

bool matches_sorted(const std::vector<double>& sorted_values, double x, double tol) {
  auto it = std::lower_bound(sorted_values.begin(), sorted_values.end(), x - tol);
  return it != sorted_values.end() && *it <= x + tol;
}

const McGroup& find_group(const std::vector<McGroup>& groups, double c) {
  for (const auto& g : groups)
    if (std::abs(g.value - c) <= kSpectrumTol) return g;
  throw std::invalid_argument("converse_criterion: c = " + std::to_string(c) +
                              " is not a minima group value");
}

bool group_isolated(const std::vector<McGroup>& groups, double c, double window) {
  for (const auto& g : groups)
    if (std::abs(g.value - c) > kSpectrumTol && std::abs(g.value - c) < window) return false;
  return true;
}

}  // namespace

CriterionVerdict converse_criterion(const FiniteMetricSpace& X, double c,
                                    std::pair<int, int> pair,
                                    const std::vector<McGroup>& groups, double window) {
  if (pair.first > pair.second) std::swap(pair.first, pair.second);
  const McGroup& group = find_group(groups, c);
  if (group.size() != 1)
    throw std::invalid_argument("converse_criterion: the minimum value is attained by " +
                                std::to_string(group.size()) +
                                " pairs; the prediction needs exactly one");
  if (group.pairs.front() != pair)
    throw std::invalid_argument("converse_criterion: pair does not attain the minimum at c");
  if (!group_isolated(groups, c, window))
    throw std::invalid_argument("converse_criterion: c is not isolated within the window");

  CriterionVerdict verdict;
  verdict.pair = pair;
  verdict.c = c;
  for (int z = 0; z < X.size(); ++z) {
    if (z == pair.first || z == pair.second) continue;
    if (X.dist(z, pair.first) <= c && X.dist(z, pair.second) <= c) {
      verdict.witness = z;  // smallest such index, scan is ascending
      break;
    }
  }
  verdict.predicted_in_spectrum = !verdict.witness.has_value();
  return verdict;
}

CriterionVerdict converse_criterion(const FiniteMetricSpace& X, double c,
                                    std::pair<int, int> pair, double epsilon, double tau,
                                    double window) {
  auto records = eps_local_minima(X, epsilon);
  const auto groups = group_mc(records, tau);
  return converse_criterion(X, c, pair, groups, window);
}

std::vector<CriterionVerdict> criterion_verdicts(const FiniteMetricSpace& X,
                                                 const std::vector<McGroup>& groups,
                                                 double window) {
  std::vector<CriterionVerdict> verdicts;
  for (const auto& g : groups) {
    if (g.size() != 1 || !group_isolated(groups, g.value, window)) continue;
    verdicts.push_back(converse_criterion(X, g.value, g.pairs.front(), groups, window));
  }
  return verdicts;
}

void verify_criterion(std::vector<CriterionVerdict>& verdicts, const Barcode& barcode) {
  const SpectrumReport spectra = extract_spectra(barcode);
  for (auto& v : verdicts) {
    v.observed_in_spectrum = matches_sorted(spectra.h0_merge_scales, v.c, kSpectrumTol) ||
                             matches_sorted(spectra.h1_birth_scales, v.c, kSpectrumTol);
    v.agree = v.predicted_in_spectrum == v.observed_in_spectrum;
  }
}

int crossing_number(const Filtration& F, std::span<const std::pair<int, int>> chain,
                    std::span<const int> A, std::span<const int> B) {
  const int n = F.n_points();
  std::vector<char> in_a(n, 0), in_b(n, 0);
  for (int a : A) {
    if (a < 0 || a >= n) throw std::out_of_range("crossing_number: A index out of range");
    in_a[a] = 1;
  }
  for (int b : B) {
    if (b < 0 || b >= n) throw std::out_of_range("crossing_number: B index out of range");
    if (in_a[b]) throw std::invalid_argument("crossing_number: A and B overlap");
    in_b[b] = 1;
  }

  int parity = 0;
  for (auto [a, b] : chain) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw std::invalid_argument("crossing_number: degenerate or out-of-range chain edge");
    if ((in_a[a] && in_b[b]) || (in_a[b] && in_b[a])) parity ^= 1;
  }
  return parity;
}

bool crossing_obstruction_certificate(const Filtration& F, double r, std::span<const int> A,
                                      std::span<const int> B) {
  for (const auto& s : F.simplices) {
    if (!simplex_present(s.value, r, F.convention)) break;
    if (s.dim != 2) continue;
    const std::pair<int, int> boundary[3] = {
        {s.v[0], s.v[1]}, {s.v[0], s.v[2]}, {s.v[1], s.v[2]}};
    if (crossing_number(F, boundary, A, B) != 0) return false;
  }
  return true;
}

bool BoundLedger::all_nonnegative() const {
  for (const auto& row : rows)
    if (row.slack < 0) return false;
  return true;
}

bool BoundLedger::global_ok() const {
  for (const auto& row : global)
    if (!row.ok) return false;
  return true;
}

BoundLedger bound_check(const Barcode& barcode, const std::vector<McGroup>& groups,
                        double window, std::optional<int> model_b1) {
  for (const auto& g : groups)
    if (!group_isolated(groups, g.value, window))
      throw std::invalid_argument("bound_check: scale " + std::to_string(g.value) +
                                  " is not isolated within the window");

  const SpectrumReport spectra = extract_spectra(barcode);
  BoundLedger ledger;

  for (const auto& g : groups) {
    BoundRow row;
    row.scale = g.value;
    row.mc_size = g.size();
    for (const auto& delta : spectra.deltas) {
      if (std::abs(delta.scale - g.value) > kSpectrumTol) continue;
      row.dh1 += delta.h1_change;
      row.dh0_drop -= delta.h0_change;
    }
    row.slack = row.mc_size - row.dh1 - row.dh0_drop;
    ledger.rows.push_back(row);
  }

  if (model_b1 && !groups.empty()) {
    // rank H_1(r) <= model_b1 + sum of |M_c| over minima values c < r,
    // probed inside every interval between consecutive group values.
    auto probe = [&](double r, int bound) {
      ledger.global.push_back(
          {r, rank_at(barcode, 1, r), bound, rank_at(barcode, 1, r) <= bound});
    };
    const double first = groups.front().value;
    probe(0.5 * first, *model_b1);
    probe(0.99 * first, *model_b1);
    int cumulative = *model_b1;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      cumulative += groups[g].size();
      const double lo = groups[g].value;
      const double hi =
          g + 1 < groups.size() ? groups[g + 1].value : lo + std::max(1.0, lo);
      probe(lo + 0.01 * (hi - lo), cumulative);
      probe(lo + 0.50 * (hi - lo), cumulative);
      probe(lo + 0.99 * (hi - lo), cumulative);
    }
  }
  return ledger;
}

bool reconstruction_check(const FiniteMetricSpace& X, int expected_b1, double lo, double hi) {
  if (!(0.0 < lo && lo < hi))
    throw std::invalid_argument("reconstruction_check: window must satisfy 0 < lo < hi");
  const Filtration F = build_filtration(X, Convention::OpenRips, hi);
  const Barcode B = compute_barcode(F);
  for (int k = 0; k < 50; ++k) {
    const double r = lo + (k + 0.5) * (hi - lo) / 50.0;
    if (rank_at(B, 1, r) != expected_b1) return false;
  }
  return true;
}

std::vector<DetectionEntry> selective_detection(const FiniteMetricSpace& X,
                                                const std::vector<LocalMinimumRecord>& records,
                                                double lambda) {
  const Filtration F =
      build_filtration(X, Convention::SelectiveOpen, std::nullopt, {lambda});
  const SpectrumReport spectra = extract_spectra(compute_barcode(F));

  std::vector<DetectionEntry> entries;
  entries.reserve(records.size());
  for (const auto& rec : records) {
    DetectionEntry e;
    e.i = rec.i;
    e.j = rec.j;
    e.value = rec.value;
    e.h0_detected = matches_sorted(spectra.h0_merge_scales, rec.value, kSpectrumTol);
    e.h1_detected = matches_sorted(spectra.h1_birth_scales, rec.value, kSpectrumTol);
    entries.push_back(e);
  }
  return entries;
}

ContainmentReport verify_spectrum_containment(const FiniteMetricSpace& X, double epsilon,
                                              std::span<const double> selective_lambdas) {
  ContainmentReport report;
  report.epsilon = epsilon;

  const auto records = eps_local_minima(X, epsilon);
  std::vector<double> minima_values;
  minima_values.reserve(records.size());
  for (const auto& rec : records) minima_values.push_back(rec.value);
  // records are value-sorted already

  auto check_filtration = [&](const std::string& name, Convention convention, double lambda) {
    const Filtration F = build_filtration(X, convention, std::nullopt, {lambda});
    const SpectrumReport spectra = extract_spectra(compute_barcode(F));
    for (double scale : spectra.h0_merge_scales) {
      ++report.scales_checked;
      if (!matches_sorted(minima_values, scale, kSpectrumTol))
        report.violations.push_back({name, 0, scale});
    }
    for (double scale : spectra.h1_birth_scales) {
      ++report.scales_checked;
      if (!matches_sorted(minima_values, scale, kSpectrumTol))
        report.violations.push_back({name, 1, scale});
    }
  };

  check_filtration("open", Convention::OpenRips, 1.0);
  for (double lambda : selective_lambdas)
    check_filtration("selective(" + std::to_string(lambda) + ")", Convention::SelectiveOpen,
                     lambda);
  return report;
}

double isolation_window(const std::vector<McGroup>& groups) {
  if (groups.size() < 2) return groups.empty() ? 1.0 : std::max(1.0, groups.front().value);
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t g = 1; g < groups.size(); ++g)
    min_gap = std::min(min_gap, groups[g].value - groups[g - 1].value);
  return 0.5 * min_gap;
}

}  // namespace ripsedge
