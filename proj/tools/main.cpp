#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ripsedge/analysis.hpp"
#include "ripsedge/generators.hpp"
#include "ripsedge/harness.hpp"
#include "ripsedge/io.hpp"
#include "ripsedge/minima.hpp"
#include "ripsedge/persistence.hpp"

namespace fs = std::filesystem;
using namespace ripsedge;

namespace {

// exit codes: 0 success, 1 invalid input, 2 a check reported a violation
constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitViolation = 2;

struct InputOptions {
  std::string input;
  std::string format = "points";
  std::string metric = "euclidean";
};

struct RunOptions {
  InputOptions in;
  std::string convention = "open";
  std::optional<double> lambda;
  std::optional<double> max_value;
  double epsilon = 0.0;
  double tau = 1e-9;
  std::string out = ".";
  bool summary = false;
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.input, "input CSV file")->required();
  cmd->add_option("--format", in.format, "input layout")
      ->check(CLI::IsMember({"points", "matrix"}));
  cmd->add_option("--metric", in.metric, "metric for point input")
      ->check(CLI::IsMember({"euclidean", "manhattan"}));
}

FiniteMetricSpace load_space(const InputOptions& in) {
  if (in.format == "matrix") return io::read_matrix_csv(in.input);
  const MetricKind kind =
      in.metric == "manhattan" ? MetricKind::Manhattan : MetricKind::Euclidean;
  return io::read_points_csv(in.input, kind);
}

Convention parse_convention(const std::string& name) {
  if (name == "open") return Convention::OpenRips;
  if (name == "closed") return Convention::ClosedRips;
  return Convention::SelectiveOpen;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::istringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) values.push_back(std::stod(token));
  return values;
}

void write_space_files(const fs::path& dir, const FiniteMetricSpace& X) {
  if (X.has_coords()) io::write_points_csv(dir / "points.csv", X.coords());
  io::write_matrix_csv(dir / "matrix.csv", X);
}

int run_generate(const std::string& fixture, int n, double radius, int k, double gap,
                 double height, double c, double h, const std::string& centers,
                 const std::string& counts, const std::string& spreads, std::uint64_t seed,
                 const std::string& out, bool summary) {
  FiniteMetricSpace X = [&] {
    if (fixture == "circle") return circle_sample(n, radius);
    if (fixture == "ladder") return ladder_space(k, gap, height);
    if (fixture == "witness-triangle") return witness_triangle(c, h);
    // clusters
    std::vector<ClusterSpec> specs;
    std::istringstream stream(centers);
    std::string token;
    while (std::getline(stream, token, ';'))
      specs.push_back({parse_number_list(token), 1, 0.0});
    const auto count_list = parse_number_list(counts);
    const auto spread_list = parse_number_list(spreads);
    if (count_list.size() != specs.size() || spread_list.size() != specs.size())
      throw std::invalid_argument("clusters: --centers, --counts, --spreads disagree in length");
    for (std::size_t s = 0; s < specs.size(); ++s) {
      specs[s].count = static_cast<int>(count_list[s]);
      specs[s].spread = spread_list[s];
    }
    return cluster_sample(specs, seed);
  }();

  write_space_files(out, X);
  if (summary)
    std::cout << "generated " << fixture << " with " << X.size() << " points into " << out
              << "\n";
  return kExitOk;
}

int run_persistence(const RunOptions& opt) {
  if ((opt.convention == "selective") != opt.lambda.has_value())
    throw std::invalid_argument("--lambda is required for --convention selective, and "
                                "forbidden otherwise");
  const auto X = load_space(opt.in);
  const auto F = build_filtration(X, parse_convention(opt.convention), opt.max_value,
                                  {opt.lambda.value_or(1.0)});
  const auto B = compute_barcode(F);
  const auto spectra = extract_spectra(B);

  const fs::path dir(opt.out);
  io::write_filtration_csv(dir / "filtration.csv", F);
  io::write_barcode_json(dir / "barcode.json", B);
  io::write_barcode_csv(dir / "barcode.csv", B);
  io::write_text(dir / "spectra.json", io::spectra_to_json(spectra));
  io::write_diagram_svg(dir / "diagram.svg", B);

  if (opt.summary) {
    int h0 = 0, h1 = 0;
    for (const auto& bar : B.bars) (bar.dim == 0 ? h0 : h1) += 1;
    std::cout << "barcode: " << h0 << " H_0 bars, " << h1 << " H_1 bars -> " << opt.out
              << "\n";
  }
  return kExitOk;
}

int run_analyze(const RunOptions& opt) {
  if (opt.epsilon <= 0.0) throw std::invalid_argument("analyze: --epsilon must be positive");
  if (opt.convention == "selective" && !opt.lambda)
    throw std::invalid_argument("--lambda is required for --convention selective");
  const auto X = load_space(opt.in);

  auto records = eps_local_minima(X, opt.epsilon);
  const auto groups = group_mc(records, opt.tau);
  const double window = isolation_window(groups);
  for (auto& rec : records) rec.isolated = is_isolated(records, rec.value, window);

  const auto F = build_filtration(X, Convention::OpenRips, opt.max_value);
  const auto B = compute_barcode(F);

  auto verdicts = criterion_verdicts(X, groups, window);
  verify_criterion(verdicts, B);
  const auto ledger = bound_check(B, groups, window);
  std::vector<double> lambdas;
  if (opt.lambda) lambdas.push_back(*opt.lambda);
  const auto containment = verify_spectrum_containment(X, opt.epsilon, lambdas);

  const fs::path dir(opt.out);
  io::write_records_csv(dir / "minima.csv", records);
  io::write_text(dir / "verdicts.json", io::verdicts_to_json(verdicts));
  io::write_verdicts_csv(dir / "verdicts.csv", verdicts);
  io::write_text(dir / "bounds.json", io::ledger_to_json(ledger));
  io::write_ledger_csv(dir / "bounds.csv", ledger);
  io::write_text(dir / "containment.json", io::containment_to_json(containment));
  io::write_barcode_json(dir / "barcode.json", B);
  if (opt.lambda) {
    const auto detection = selective_detection(X, records, *opt.lambda);
    io::write_text(dir / "detection.json", io::detection_to_json(detection));
  }

  int disagreements = 0;
  for (const auto& v : verdicts) disagreements += !v.agree;
  const bool ok = disagreements == 0 && ledger.all_nonnegative() && containment.ok();
  if (opt.summary)
    std::cout << "analyze: " << records.size() << " minima, " << verdicts.size()
              << " verdicts (" << disagreements << " disagree), "
              << containment.violations.size() << " containment violations -> " << opt.out
              << "\n";
  return ok ? kExitOk : kExitViolation;
}

int run_verify(int trials, std::uint64_t seed, int jobs, const std::string& out,
               bool summary) {
  harness::SuiteOptions options;
  options.trials = trials;
  options.seed = seed;
  options.jobs = jobs;
  const auto suite = harness::run_verification_suite(options);

  nlohmann::json checks;
  for (const auto& r : suite.results) {
    checks[r.name] = {{"instances", r.instances},
                      {"checks", r.checks},
                      {"violations", r.violations},
                      {"worst", r.worst},
                      {"seconds", r.seconds}};
    std::cerr << (r.ok() ? "[ok]   " : "[FAIL] ") << r.name << ": " << r.checks
              << " checks, " << r.violations << " violations\n";
  }
  nlohmann::json doc;
  doc["checks"] = checks;
  doc["ok"] = suite.ok();
  doc["options"] = {{"trials", options.trials},
                    {"small_trials", options.small_trials},
                    {"seed", options.seed},
                    {"jobs", options.jobs},
                    {"n_min", options.n_min},
                    {"n_max", options.n_max},
                    {"lambdas", options.lambdas}};
  io::write_text(fs::path(out) / "summary.json", doc.dump(2) + "\n");

  if (summary) {
    long long violations = 0;
    for (const auto& r : suite.results) violations += r.violations;
    std::cout << "verify: " << suite.results.size() << " suites, " << violations
              << " violations -> " << out << "\n";
  }
  return suite.ok() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"persistence and critical-edge analysis of Rips filtrations on finite "
               "metric spaces"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // generate
  auto* generate = app.add_subcommand("generate", "write a fixture space as CSV files");
  std::string fixture;
  generate->add_option("fixture", fixture, "circle | clusters | ladder | witness-triangle")
      ->required()
      ->check(CLI::IsMember({"circle", "clusters", "ladder", "witness-triangle"}));
  int gen_n = 12, gen_k = 6;
  double gen_radius = 1.0, gen_gap = 0.04, gen_height = 1.0, gen_c = 1.0, gen_h = 0.3;
  std::string gen_centers = "0,0;4,0;0,5", gen_counts = "6,6,5", gen_spreads = "0.2,0.2,0.2";
  std::uint64_t gen_seed = 7;
  std::string gen_out = ".";
  bool gen_summary = false;
  generate->add_option("--n", gen_n, "circle: sample count");
  generate->add_option("--radius", gen_radius, "circle: radius");
  generate->add_option("--k", gen_k, "ladder: rung count");
  generate->add_option("--gap", gen_gap, "ladder: rail spacing");
  generate->add_option("--height", gen_height, "ladder: rung height");
  generate->add_option("--c", gen_c, "witness-triangle: base length");
  generate->add_option("--h", gen_h, "witness-triangle: apex height");
  generate->add_option("--centers", gen_centers, "clusters: semicolon-separated centers");
  generate->add_option("--counts", gen_counts, "clusters: per-cluster point counts");
  generate->add_option("--spreads", gen_spreads, "clusters: per-cluster spreads");
  generate->add_option("--seed", gen_seed, "clusters: RNG seed");
  generate->add_option("--out", gen_out, "output directory");
  generate->add_flag("--summary", gen_summary, "print a one-line digest");
  generate->callback([&] {
    exit_code = run_generate(fixture, gen_n, gen_radius, gen_k, gen_gap, gen_height, gen_c,
                             gen_h, gen_centers, gen_counts, gen_spreads, gen_seed, gen_out,
                             gen_summary);
  });

  // persistence
  auto* persistence = app.add_subcommand("persistence", "compute a barcode and diagram");
  RunOptions popt;
  add_input_flags(persistence, popt.in);
  persistence->add_option("--convention", popt.convention, "filtration convention")
      ->check(CLI::IsMember({"open", "closed", "selective"}));
  persistence->add_option("--lambda", popt.lambda, "selective second-radius fraction");
  persistence->add_option("--max-value", popt.max_value, "truncate the filtration");
  persistence->add_option("--out", popt.out, "output directory");
  persistence->add_flag("--summary", popt.summary, "print a one-line digest");
  persistence->callback([&] { exit_code = run_persistence(popt); });

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "local minima, criterion verdicts, bound ledger, containment report");
  RunOptions aopt;
  add_input_flags(analyze, aopt.in);
  analyze->add_option("--convention", aopt.convention, "open or selective (needs --lambda)")
      ->check(CLI::IsMember({"open", "selective"}));
  analyze->add_option("--epsilon", aopt.epsilon, "local-minimum discretization radius")
      ->required();
  analyze->add_option("--tau", aopt.tau, "value-grouping tolerance");
  analyze->add_option("--lambda", aopt.lambda, "also run selective detection at this lambda");
  analyze->add_option("--max-value", aopt.max_value, "truncate the filtration");
  analyze->add_option("--out", aopt.out, "output directory");
  analyze->add_flag("--summary", aopt.summary, "print a one-line digest");
  analyze->callback([&] { exit_code = run_analyze(aopt); });

  // verify
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  int trials = 200, jobs = 1;
  std::uint64_t seed = 7;
  std::string verify_out = ".";
  bool verify_summary = false;
  verify->add_option("--trials", trials, "random instances for the main suites");
  verify->add_option("--seed", seed, "suite RNG seed");
  verify->add_option("--jobs", jobs, "worker threads for the random-instance suites");
  verify->add_option("--out", verify_out, "output directory");
  verify->add_flag("--summary", verify_summary, "print a one-line digest");
  verify->callback(
      [&] { exit_code = run_verify(trials, seed, jobs, verify_out, verify_summary); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return exit_code;
}
