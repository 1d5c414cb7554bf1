#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "ripsedge/io.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ripsedge_cli_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run_cli(const std::string& args) {
  const std::string command = std::string(RIPSEDGE_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(command.c_str());
  return status == -1 ? -1 : (status >> 8) & 0xff;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int count_lines(const fs::path& p) {
  const std::string text = slurp(p);
  int lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

void write_square(const fs::path& p) {
  ripsedge::io::write_points_csv(p, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

}  // namespace

TEST_CASE("generate writes fixture files") {
  TempDir tmp;
  CHECK(run_cli("generate circle --n 20 --radius 1 --out " + tmp.path.string()) == 0);
  CHECK(count_lines(tmp.path / "points.csv") == 20);
  CHECK(count_lines(tmp.path / "matrix.csv") == 20);

  CHECK(run_cli("generate witness-triangle --c 1 --h 0.3 --out " + tmp.path.string()) == 0);
  CHECK(count_lines(tmp.path / "points.csv") == 3);

  CHECK(run_cli("generate ladder --k 6 --gap 0.04 --height 1 --out " + tmp.path.string()) ==
        0);
  CHECK(count_lines(tmp.path / "points.csv") == 12);

  CHECK(run_cli("generate nonsense --out " + tmp.path.string()) == 1);
  CHECK(run_cli("generate ladder --k 1 --out " + tmp.path.string()) == 1);
}

TEST_CASE("persistence subcommand") {
  TempDir tmp;
  write_square(tmp.path / "square.csv");
  const std::string base = "persistence --input " + (tmp.path / "square.csv").string() +
                           " --format points --metric euclidean --out ";

  const fs::path open_dir = tmp.path / "open";
  CHECK(run_cli(base + open_dir.string() + " --convention open") == 0);
  const std::string barcode = slurp(open_dir / "barcode.json");
  CHECK(barcode.find("1.4142135623730951") != std::string::npos);
  CHECK(fs::exists(open_dir / "barcode.csv"));
  CHECK(fs::exists(open_dir / "diagram.svg"));
  CHECK(fs::exists(open_dir / "filtration.csv"));
  CHECK(fs::exists(open_dir / "spectra.json"));

  // lambda = 1 reduces to the plain filtration, byte for byte
  const fs::path sel_dir = tmp.path / "sel";
  CHECK(run_cli(base + sel_dir.string() + " --convention selective --lambda 1") == 0);
  CHECK(slurp(sel_dir / "barcode.json") == barcode);

  // selective without lambda (and lambda without selective) are invalid
  CHECK(run_cli(base + (tmp.path / "x").string() + " --convention selective") == 1);
  CHECK(run_cli(base + (tmp.path / "x").string() + " --convention open --lambda 0.5") == 1);

  // unreadable and empty inputs exit 1
  CHECK(run_cli("persistence --input " + (tmp.path / "none.csv").string() + " --out " +
                (tmp.path / "y").string()) == 1);
  ripsedge::io::write_text(tmp.path / "empty.csv", "");
  CHECK(run_cli("persistence --input " + (tmp.path / "empty.csv").string() + " --out " +
                (tmp.path / "z").string()) == 1);
}

TEST_CASE("analyze subcommand") {
  TempDir tmp;
  ripsedge::io::write_points_csv(tmp.path / "witness.csv", {{0, 0}, {1, 0}, {0.5, 0.3}});
  const std::string base = "analyze --input " + (tmp.path / "witness.csv").string() +
                           " --epsilon 0.2 --out ";

  const fs::path dir = tmp.path / "a";
  CHECK(run_cli(base + dir.string() + " --lambda 0.4") == 0);
  for (const char* name : {"minima.csv", "verdicts.json", "verdicts.csv", "bounds.json",
                           "bounds.csv", "containment.json", "detection.json"})
    CHECK(fs::exists(dir / name));

  const std::string verdicts = slurp(dir / "verdicts.json");
  CHECK(verdicts.find("\"agree\": true") != std::string::npos);
  const std::string detection = slurp(dir / "detection.json");
  CHECK(detection.find("\"h1_detected\": true") != std::string::npos);

  // byte-identical outputs on a repeated run
  const fs::path dir2 = tmp.path / "b";
  CHECK(run_cli(base + dir2.string() + " --lambda 0.4") == 0);
  for (const char* name : {"minima.csv", "verdicts.json", "bounds.json", "containment.json"})
    CHECK(slurp(dir / name) == slurp(dir2 / name));

  CHECK(run_cli("analyze --input " + (tmp.path / "witness.csv").string() + " --out " +
                dir.string()) == 1);  // --epsilon is required
}

TEST_CASE("verify subcommand writes a summary") {
  TempDir tmp;
  CHECK(run_cli("verify --trials 2 --seed 5 --jobs 2 --out " + tmp.path.string()) == 0);
  const std::string summary = slurp(tmp.path / "summary.json");
  CHECK(summary.find("\"ok\": true") != std::string::npos);
  CHECK(summary.find("criterion_equivalence") != std::string::npos);
  CHECK(summary.find("merge_partition") != std::string::npos);
}
