#include "ripsedge/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ripsedge/analysis.hpp"
#include "ripsedge/bruteforce.hpp"
#include "ripsedge/generators.hpp"

namespace ripsedge::harness {

namespace {

double canonical(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

class Timer {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Per-instance tally; slots are merged in index order so the summary is
// byte-identical regardless of the worker count.
struct Tally {
  long long checks = 0;
  long long violations = 0;
  std::string first_bad;

  void fail(const std::string& what) {
    ++violations;
    if (first_bad.empty()) first_bad = what;
  }
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) fail(what);
  }
};

template <class Fn>
void parallel_for(int count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  const int worker_count = std::min(jobs, count);
  workers.reserve(worker_count);
  for (int w = 0; w < worker_count; ++w)
    workers.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : workers) t.join();
}

CheckResult merge_tallies(std::string name, const std::vector<Tally>& tallies,
                          long long instances, double seconds) {
  CheckResult result;
  result.name = std::move(name);
  result.instances = instances;
  result.seconds = seconds;
  for (const auto& t : tallies) {
    result.checks += t.checks;
    result.violations += t.violations;
    if (result.worst.empty() && !t.first_bad.empty()) result.worst = t.first_bad;
  }
  return result;
}

struct Fixture {
  std::string name;
  FiniteMetricSpace space;
  int model_b1 = -1;  // first Betti number of the sampled model, -1 if unknown
};

FiniteMetricSpace unit_square() {
  return FiniteMetricSpace::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                                        MetricKind::Euclidean);
}

FiniteMetricSpace two_points() {
  return FiniteMetricSpace::from_matrix({{0, 1}, {1, 0}});
}

FiniteMetricSpace collinear_triple() {
  return FiniteMetricSpace::from_points({{0}, {1}, {2.5}}, MetricKind::Euclidean);
}

FiniteMetricSpace three_clusters(std::uint64_t seed) {
  return cluster_sample({{{0.0, 0.0}, 6, 0.2}, {{4.0, 0.0}, 6, 0.2}, {{0.0, 5.0}, 5, 0.2}},
                        seed);
}

std::vector<Fixture> fixture_battery() {
  std::vector<Fixture> fixtures;
  fixtures.push_back({"square", unit_square(), 1});
  fixtures.push_back({"two_points", two_points(), 0});
  fixtures.push_back({"collinear", collinear_triple(), 0});
  fixtures.push_back({"witness_h0.3", witness_triangle(1.0, 0.3), 0});
  fixtures.push_back({"witness_h0.5", witness_triangle(1.0, 0.5), 0});
  for (int k = 2; k <= 8; ++k)
    fixtures.push_back({"ladder_k" + std::to_string(k), ladder_space(k, 0.04, 1.0), k - 1});
  fixtures.push_back({"circle_12", circle_sample(12, 1.0), 1});
  fixtures.push_back({"circle_48", circle_sample(48, 1.0), 1});
  fixtures.push_back({"clusters", three_clusters(11), 0});
  return fixtures;
}

std::string describe_pair(int i, int j, double c) {
  std::ostringstream oss;
  oss << "pair (" << i << "," << j << ") at value " << c;
  return oss.str();
}

}  // namespace

double suggested_epsilon(const FiniteMetricSpace& X) {
  const auto values = X.pairwise_distances();
  std::vector<double> distinct;
  for (double v : values)
    if (v > 0.0 && (distinct.empty() || v != distinct.back())) distinct.push_back(v);
  if (distinct.empty()) return 1.0;
  if (distinct.size() == 1) return 0.5 * distinct.front();
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < distinct.size(); ++k)
    min_gap = std::min(min_gap, distinct[k] - distinct[k - 1]);
  return 0.5 * min_gap;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ull * (index + 1));
}

FiniteMetricSpace random_planar_space(std::uint64_t seed, int n) {
  if (n < 2) throw std::invalid_argument("random_planar_space: need at least 2 points");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::vector<double>> points;
    points.reserve(n);
    for (int i = 0; i < n; ++i) points.push_back({canonical(rng), canonical(rng)});
    auto X = FiniteMetricSpace::from_points(points, MetricKind::Euclidean);
    const auto dists = X.pairwise_distances();
    bool ok = dists.front() > 1e-6;
    for (std::size_t k = 1; ok && k < dists.size(); ++k)
      ok = dists[k] - dists[k - 1] > 1e-8;
    if (ok) return X;
  }
  throw std::runtime_error("random_planar_space: could not reach general position");
}

CheckResult check_criterion_equivalence(const SuiteOptions& opt) {
  Timer timer;
  std::vector<Tally> tallies(opt.trials);
  parallel_for(opt.trials, opt.jobs, [&](int i) {
    Tally& tally = tallies[i];
    std::mt19937_64 rng(mix_seed(opt.seed, i));
    const int n = opt.n_min + static_cast<int>(rng() % (opt.n_max - opt.n_min + 1));
    const auto X = random_planar_space(rng(), n);

    auto records = eps_local_minima(X, suggested_epsilon(X));
    const auto groups = group_mc(records);
    const double window = isolation_window(groups);
    auto verdicts = criterion_verdicts(X, groups, window);
    const auto barcode = compute_barcode(build_filtration(X, Convention::OpenRips));
    verify_criterion(verdicts, barcode);

    for (const auto& v : verdicts) {
      std::ostringstream what;
      what << "instance " << i << ": " << describe_pair(v.pair.first, v.pair.second, v.c)
           << " predicted=" << v.predicted_in_spectrum
           << " observed=" << v.observed_in_spectrum;
      tally.expect(v.agree, what.str());
    }
  });
  return merge_tallies("criterion_equivalence", tallies, opt.trials, timer.seconds());
}

CheckResult check_spectrum_containment(const SuiteOptions& opt) {
  Timer timer;
  const auto fixtures = fixture_battery();
  const int fixture_count = static_cast<int>(fixtures.size());
  std::vector<Tally> tallies(fixture_count + opt.trials);

  auto run_space = [&](Tally& tally, const std::string& name, const FiniteMetricSpace& X) {
    const auto report = verify_spectrum_containment(X, suggested_epsilon(X), opt.lambdas);
    tally.checks += report.scales_checked;
    for (const auto& v : report.violations) {
      std::ostringstream what;
      what << name << ": " << v.filtration << " H_" << v.dim << " scale " << v.scale
           << " is not a minima value";
      tally.fail(what.str());
    }
  };

  parallel_for(fixture_count + opt.trials, opt.jobs, [&](int slot) {
    if (slot < fixture_count) {
      run_space(tallies[slot], fixtures[slot].name, fixtures[slot].space);
      return;
    }
    const int i = slot - fixture_count;
    std::mt19937_64 rng(mix_seed(opt.seed, i));
    const int n = opt.n_min + static_cast<int>(rng() % (opt.n_max - opt.n_min + 1));
    const auto X = random_planar_space(rng(), n);
    run_space(tallies[slot], "instance " + std::to_string(i), X);
  });
  return merge_tallies("spectrum_containment", tallies, fixture_count + opt.trials,
                       timer.seconds());
}

CheckResult check_square_barcode() {
  Timer timer;
  Tally tally;
  const auto barcode = compute_barcode(build_filtration(unit_square(), Convention::OpenRips));

  std::vector<Bar> h0, h1;
  for (const auto& bar : barcode.bars) (bar.dim == 0 ? h0 : h1).push_back(bar);

  tally.expect(h0.size() == 4, "square: expected 4 H_0 bars");
  int finite_unit = 0, infinite = 0;
  for (const auto& bar : h0) {
    if (!bar.finite())
      ++infinite;
    else if (std::abs(bar.death - 1.0) <= 1e-12 && bar.birth == 0.0)
      ++finite_unit;
  }
  tally.expect(infinite == 1, "square: expected one infinite H_0 bar");
  tally.expect(finite_unit == 3, "square: expected three H_0 bars (0,1]");

  tally.expect(h1.size() == 1, "square: expected exactly one H_1 bar");
  if (h1.size() == 1) {
    tally.expect(std::abs(h1[0].birth - 1.0) <= 1e-12, "square: H_1 birth != 1");
    tally.expect(std::abs(h1[0].death - std::sqrt(2.0)) <= 1e-12,
                 "square: H_1 death != sqrt(2)");
  }
  return merge_tallies("square_barcode", {tally}, 1, timer.seconds());
}

CheckResult check_ladder_rank_growth() {
  Timer timer;
  Tally tally;
  for (int k = 2; k <= 8; ++k) {
    const auto X = ladder_space(k, 0.04, 1.0);
    const auto F = build_filtration(X, Convention::OpenRips);
    const auto B = compute_barcode(F);
    const int expected = k - 1;
    tally.expect(rank_at(B, 1, 1.02) == expected,
                 "ladder k=" + std::to_string(k) + ": H_1 rank at 1.02 != k-1");
    const auto oracle = bruteforce::betti_at(F, 1.02);
    tally.expect(oracle.b1 == expected,
                 "ladder k=" + std::to_string(k) + ": elimination oracle disagrees");
  }
  return merge_tallies("ladder_rank_growth", {tally}, 7, timer.seconds());
}

CheckResult check_selective_witness_detection() {
  Timer timer;
  Tally tally;
  const auto X = witness_triangle(1.0, 0.3);
  const double expected_death = std::sqrt(0.34) / 0.4;

  const auto plain = compute_barcode(build_filtration(X, Convention::OpenRips));
  int plain_h1 = 0;
  for (const auto& bar : plain.bars) plain_h1 += bar.dim == 1;
  tally.expect(plain_h1 == 0, "witness: plain filtration should carry no H_1 bar");

  const auto selective =
      compute_barcode(build_filtration(X, Convention::SelectiveOpen, std::nullopt, {0.4}));
  std::vector<Bar> h1;
  for (const auto& bar : selective.bars)
    if (bar.dim == 1) h1.push_back(bar);
  tally.expect(h1.size() == 1, "witness: selective lambda=0.4 should carry one H_1 bar");
  if (h1.size() == 1) {
    tally.expect(std::abs(h1[0].birth - 1.0) <= 1e-12, "witness: selective birth != 1");
    tally.expect(std::abs(h1[0].death - expected_death) <= 1e-12,
                 "witness: selective death != sqrt(0.34)/0.4");
  }

  auto records = eps_local_minima(X, suggested_epsilon(X));
  group_mc(records);
  const auto detected = selective_detection(X, records, 0.4);
  const auto detected_plain = selective_detection(X, records, 1.0);
  for (std::size_t k = 0; k < records.size(); ++k) {
    if (std::abs(records[k].value - 1.0) <= 1e-12) {
      tally.expect(detected[k].h1_detected && !detected[k].h0_detected,
                   "witness: value 1 should register as a selective H_1 birth");
      tally.expect(!detected_plain[k].detected(),
                   "witness: value 1 should stay invisible at lambda=1");
    } else {
      tally.expect(detected[k].h0_detected,
                   "witness: short sides should register as merge scales");
    }
  }
  return merge_tallies("selective_witness_detection", {tally}, 1, timer.seconds());
}

CheckResult check_bound_slack(const SuiteOptions& opt) {
  Timer timer;
  const auto fixtures = fixture_battery();
  const int fixture_count = static_cast<int>(fixtures.size());
  std::vector<Tally> tallies(fixture_count + opt.trials);

  auto run_space = [](Tally& tally, const std::string& name, const FiniteMetricSpace& X,
                      std::optional<int> model_b1) {
    auto records = eps_local_minima(X, suggested_epsilon(X));
    const auto groups = group_mc(records);
    const double window = isolation_window(groups);
    const auto barcode = compute_barcode(build_filtration(X, Convention::OpenRips));
    const auto ledger = bound_check(barcode, groups, window, model_b1);
    for (const auto& row : ledger.rows) {
      std::ostringstream what;
      what << name << ": negative slack " << row.slack << " at scale " << row.scale;
      tally.expect(row.slack >= 0, what.str());
    }
    for (const auto& row : ledger.global) {
      std::ostringstream what;
      what << name << ": H_1 rank " << row.h1_rank << " exceeds bound " << row.bound
           << " at r=" << row.r;
      tally.expect(row.ok, what.str());
    }
    return ledger;
  };

  parallel_for(fixture_count + opt.trials, opt.jobs, [&](int slot) {
    Tally& tally = tallies[slot];
    if (slot < fixture_count) {
      const auto& fixture = fixtures[slot];
      const auto ledger =
          run_space(tally, fixture.name, fixture.space,
                    fixture.model_b1 >= 0 ? std::optional<int>(fixture.model_b1)
                                          : std::nullopt);
      if (fixture.name == "square") {
        bool pinned = false;
        for (const auto& row : ledger.rows)
          if (std::abs(row.scale - 1.0) <= 1e-9) pinned = row.slack == 0;
        tally.expect(pinned, "square: slack at scale 1 must be exactly 0");
      }
      return;
    }
    const int i = slot - fixture_count;
    std::mt19937_64 rng(mix_seed(opt.seed, i));
    const int n = opt.n_min + static_cast<int>(rng() % (opt.n_max - opt.n_min + 1));
    const auto X = random_planar_space(rng(), n);
    run_space(tally, "instance " + std::to_string(i), X, std::nullopt);
  });
  return merge_tallies("bound_slack", tallies, fixture_count + opt.trials, timer.seconds());
}

CheckResult check_reconstruction_circle() {
  Timer timer;
  Tally tally;
  const auto X = circle_sample(200, 1.0);
  const double lo = 0.1, hi = 0.5;
  const auto B = compute_barcode(build_filtration(X, Convention::OpenRips, hi));
  for (int k = 0; k < 50; ++k) {
    const double r = lo + (k + 0.5) * (hi - lo) / 50.0;
    std::ostringstream what;
    what << "circle_200 at r=" << r;
    tally.expect(rank_at(B, 1, r) == 1, what.str() + ": H_1 rank != 1");
    tally.expect(rank_at(B, 0, r) == 1, what.str() + ": H_0 rank != 1");
  }
  tally.expect(reconstruction_check(X, 1, lo, hi), "circle_200: reconstruction_check false");
  tally.expect(!reconstruction_check(X, 2, lo, hi),
               "circle_200: reconstruction_check accepted a wrong Betti number");
  return merge_tallies("reconstruction_circle", {tally}, 1, timer.seconds());
}

CheckResult check_homology_oracle(const SuiteOptions& opt) {
  Timer timer;
  std::vector<Tally> tallies(opt.small_trials);
  parallel_for(opt.small_trials, opt.jobs, [&](int i) {
    Tally& tally = tallies[i];
    std::mt19937_64 rng(mix_seed(opt.seed ^ 0x5EEDull, i));
    const int n = 3 + static_cast<int>(rng() % 5);  // 3..7
    const auto X = random_planar_space(rng(), n);
    const auto F = build_filtration(X, Convention::OpenRips);
    const auto B = compute_barcode(F);
    const double top = 1.05 * X.max_distance();
    for (int s = 0; s < 20; ++s) {
      const double r = canonical(rng) * top;
      const auto oracle = bruteforce::betti_at(F, r);
      std::ostringstream what;
      what << "instance " << i << " at r=" << r;
      tally.expect(rank_at(B, 0, r) == oracle.b0, what.str() + ": H_0 rank mismatch");
      tally.expect(rank_at(B, 1, r) == oracle.b1, what.str() + ": H_1 rank mismatch");
    }
  });
  return merge_tallies("homology_oracle", tallies, opt.small_trials, timer.seconds());
}

namespace {

void descent_property_checks(Tally& tally, const std::string& name,
                             const FiniteMetricSpace& X, std::pair<int, int> start,
                             double nu) {
  const auto result = descend(X, start, nu);
  const long long n = X.size();
  tally.expect(result.steps() <= n * n,
               name + ": descent exceeded n^2 steps");
  tally.expect(result.trace.front() == start, name + ": trace must begin at the start pair");
  double prev = X.dist(start.first, start.second);
  for (std::size_t t = 1; t < result.trace.size(); ++t) {
    const auto [pa, pb] = result.trace[t - 1];
    const auto [a, b] = result.trace[t];
    tally.expect(X.dist(pa, a) <= nu && X.dist(pb, b) <= nu,
                 name + ": a descent step moved farther than nu");
    const double d = X.dist(a, b);
    tally.expect(d < prev, name + ": descent distance failed to strictly decrease");
    prev = d;
  }
}

}  // namespace

CheckResult check_descent_properties(const SuiteOptions& opt) {
  Timer timer;
  Tally pinned;

  {  // two points: nothing to do, the start is already stuck
    const auto X = two_points();
    const auto result = descend(X, {0, 1}, 0.5);
    pinned.expect(result.trace.size() == 1, "two_points: expected a fixed point");
  }
  {  // antipodal circle pair walks around and the walkers meet
    const auto X = circle_sample(12, 1.0);
    descent_property_checks(pinned, "circle_12", X, {0, 6}, 0.6);
    const auto result = descend(X, {0, 6}, 0.6);
    pinned.expect(X.dist(result.final_pair.first, result.final_pair.second) == 0.0,
                  "circle_12: antipodal descent should reach distance 0");
    for (std::size_t t = 1; t < result.trace.size(); ++t)
      pinned.expect(X.dist(result.trace[t].first, result.trace[t].second) < 2.0,
                    "circle_12: trace distance after the start must stay below 2");
  }
  {  // ladder: the diagonal pair slides down to a rung
    const auto X = ladder_space(6, 0.04, 1.0);
    descent_property_checks(pinned, "ladder_6", X, {0, 11}, 0.05);
    const auto result = descend(X, {0, 11}, 0.05);
    const auto [a, b] = result.final_pair;
    pinned.expect(std::abs(X.dist(a, b) - 1.0) <= 1e-12 && b - a == 6,
                  "ladder_6: descent should settle on a rung pair");
  }

  const auto fixtures = fixture_battery();
  const int fixture_count = static_cast<int>(fixtures.size());
  std::vector<Tally> tallies(fixture_count + opt.small_trials);

  auto run_space = [&](Tally& tally, const std::string& name, const FiniteMetricSpace& X,
                       std::mt19937_64& rng) {
    const double top = X.max_distance();
    for (int p = 0; p < 10; ++p) {
      const int i = static_cast<int>(rng() % X.size());
      const int j = static_cast<int>(rng() % X.size());
      if (i == j || X.dist(i, j) <= 0.0) continue;
      for (double scale : {0.3, 0.7})
        descent_property_checks(tally, name, X, {std::min(i, j), std::max(i, j)},
                                scale * top);
    }
  };

  parallel_for(fixture_count + opt.small_trials, opt.jobs, [&](int slot) {
    Tally& tally = tallies[slot];
    if (slot < fixture_count) {
      std::mt19937_64 rng(mix_seed(opt.seed ^ 0xDE5Cull, 1000 + slot));
      run_space(tally, fixtures[slot].name, fixtures[slot].space, rng);
      return;
    }
    const int i = slot - fixture_count;
    std::mt19937_64 rng(mix_seed(opt.seed ^ 0xDE5Cull, i));
    const int n = opt.n_min + static_cast<int>(rng() % (opt.n_max - opt.n_min + 1));
    const auto X = random_planar_space(rng(), n);
    run_space(tally, "instance " + std::to_string(i), X, rng);
  });

  std::vector<Tally> all{pinned};
  all.insert(all.end(), tallies.begin(), tallies.end());
  return merge_tallies("descent_properties", all, fixture_count + opt.small_trials + 1,
                       timer.seconds());
}

CheckResult check_merge_partition(const SuiteOptions& opt) {
  Timer timer;
  const auto fixtures = fixture_battery();
  const int fixture_count = static_cast<int>(fixtures.size());
  std::vector<Tally> tallies(fixture_count + opt.small_trials);

  auto run_space = [](Tally& tally, const std::string& name, const FiniteMetricSpace& X) {
    const auto F = build_filtration(X, Convention::OpenRips);
    auto merges = merge_scales(F);
    std::sort(merges.begin(), merges.end());
    merges.erase(std::unique(merges.begin(), merges.end()), merges.end());
    try {
      for (std::size_t k = 0; k + 1 < merges.size(); ++k) {
        const double a1 = merges[k], a2 = merges[k + 1];
        tally.expect(a1_sequence_check(F, a1, 0.5 * (a1 + a2)),
                     name + ": partition mismatch between merge scales");
        tally.expect(a1_sequence_check(F, a1, a2),
                     name + ": partition mismatch at the next merge scale");
      }
      if (!merges.empty()) {
        const double last = merges.back();
        tally.expect(a1_sequence_check(F, last, last + 0.37 * std::max(1.0, last)),
                     name + ": partition mismatch beyond the last merge scale");
      }
    } catch (const std::exception& e) {
      tally.fail(name + ": " + e.what());
    }
  };

  parallel_for(fixture_count + opt.small_trials, opt.jobs, [&](int slot) {
    if (slot < fixture_count) {
      run_space(tallies[slot], fixtures[slot].name, fixtures[slot].space);
      return;
    }
    const int i = slot - fixture_count;
    std::mt19937_64 rng(mix_seed(opt.seed ^ 0xA15Eull, i));
    const int n = opt.n_min + static_cast<int>(rng() % (opt.n_max - opt.n_min + 1));
    run_space(tallies[slot], "instance " + std::to_string(i), random_planar_space(rng(), n));
  });
  return merge_tallies("merge_partition", tallies, fixture_count + opt.small_trials,
                       timer.seconds());
}

SuiteSummary run_verification_suite(const SuiteOptions& opt) {
  SuiteSummary summary;
  summary.results.push_back(check_criterion_equivalence(opt));
  summary.results.push_back(check_spectrum_containment(opt));
  summary.results.push_back(check_square_barcode());
  summary.results.push_back(check_ladder_rank_growth());
  summary.results.push_back(check_selective_witness_detection());
  summary.results.push_back(check_bound_slack(opt));
  summary.results.push_back(check_reconstruction_circle());
  summary.results.push_back(check_homology_oracle(opt));
  summary.results.push_back(check_descent_properties(opt));
  summary.results.push_back(check_merge_partition(opt));
  return summary;
}

}  // namespace ripsedge::harness
