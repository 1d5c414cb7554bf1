#include "ripsedge/minima.hpp"

#include <algorithm>
#include <stdexcept>

namespace ripsedge {

std::vector<LocalMinimumRecord> eps_local_minima(const FiniteMetricSpace& X, double epsilon) {
  if (epsilon <= 0.0) throw std::invalid_argument("eps_local_minima: epsilon must be positive");
  const int n = X.size();

  std::vector<std::vector<int>> balls(n);
  for (int i = 0; i < n; ++i) balls[i] = X.ball(i, epsilon, /*closed=*/false);

  std::vector<LocalMinimumRecord> records;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double c = X.dist(i, j);
      if (c <= 0.0) continue;
      bool defeated = false;
      for (int a : balls[i]) {
        for (int b : balls[j]) {
          // a == b is the degenerate pair (z,z); only genuine pairs compete
          if (a == b) continue;
          if (X.dist(a, b) < c) {
            defeated = true;
            break;
          }
        }
        if (defeated) break;
      }
      if (!defeated) records.push_back({i, j, c, epsilon, false, -1});
    }
  }
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    if (a.value != b.value) return a.value < b.value;
    return std::pair{a.i, a.j} < std::pair{b.i, b.j};
  });
  return records;
}

std::vector<McGroup> group_mc(std::vector<LocalMinimumRecord>& records, double tau) {
  if (tau < 0.0) throw std::invalid_argument("group_mc: tau must be >= 0");
  std::vector<std::size_t> order(records.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&records](std::size_t a, std::size_t b) {
    return records[a].value < records[b].value;
  });

  std::vector<McGroup> groups;
  double prev = 0.0;
  for (std::size_t k : order) {
    auto& rec = records[k];
    if (groups.empty() || rec.value - prev > tau) {
      groups.push_back({rec.value, {}});
    }
    rec.mc_group = static_cast<int>(groups.size()) - 1;
    groups.back().pairs.emplace_back(rec.i, rec.j);
    prev = rec.value;
  }
  return groups;
}

bool is_isolated(const std::vector<LocalMinimumRecord>& records, double c, double window) {
  if (window <= 0.0) throw std::invalid_argument("is_isolated: window must be positive");
  bool c_present = false;
  for (const auto& rec : records)
    if (rec.value == c) {
      c_present = true;
      break;
    }
  if (!c_present) throw std::invalid_argument("is_isolated: c is not a record value");

  for (const auto& rec : records)
    if (rec.value != c && rec.value > c - window && rec.value < c + window) return false;
  return true;
}

DescentResult descend(const FiniteMetricSpace& X, std::pair<int, int> start, double nu) {
  if (nu <= 0.0) throw std::invalid_argument("descend: nu must be positive");
  const int n = X.size();
  if (start.first < 0 || start.first >= n || start.second < 0 || start.second >= n)
    throw std::out_of_range("descend: start pair out of range");
  if (X.dist(start.first, start.second) <= 0.0)
    throw std::invalid_argument("descend: start pair must be at positive distance");

  DescentResult result;
  result.trace.push_back(start);
  std::pair<int, int> current = start;
  double current_dist = X.dist(current.first, current.second);

  // Each iteration strictly lowers the pair distance, so the loop runs at
  // most once per distinct distance value (< n^2 iterations).
  while (true) {
    const auto a_steps = X.ball(current.first, nu, /*closed=*/true);
    const auto b_steps = X.ball(current.second, nu, /*closed=*/true);
    std::pair<int, int> best{-1, -1};
    double best_dist = current_dist;
    // lexicographic scan order makes the first strict improvement the
    // tie-break winner among equally short candidates
    for (int a : a_steps)
      for (int b : b_steps) {
        const double d = X.dist(a, b);
        if (d < best_dist) {
          best = {a, b};
          best_dist = d;
        }
      }
    if (best.first == -1) break;
    current = best;
    current_dist = best_dist;
    result.trace.push_back(current);
  }
  result.final_pair = current;
  return result;
}

}  // namespace ripsedge
