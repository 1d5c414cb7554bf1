#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "ripsedge/generators.hpp"
#include "ripsedge/io.hpp"
#include "ripsedge/persistence.hpp"

using namespace ripsedge;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ripsedge_io_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("format_double round-trips") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const double x = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) *
                     std::pow(10.0, static_cast<int>(rng() % 13) - 6);
    CHECK(std::strtod(io::format_double(x).c_str(), nullptr) == x);
  }
}

TEST_CASE("points CSV round-trip") {
  TempDir tmp;
  const auto X = circle_sample(9, 1.3);
  io::write_points_csv(tmp.path / "p.csv", X.coords());
  const auto back = io::read_points_csv(tmp.path / "p.csv", MetricKind::Euclidean);
  REQUIRE(back.size() == X.size());
  for (int i = 0; i < X.size(); ++i)
    for (int j = 0; j < X.size(); ++j) CHECK(back.dist(i, j) == X.dist(i, j));
}

TEST_CASE("points CSV header detection") {
  TempDir tmp;
  io::write_text(tmp.path / "h.csv", "x,y\n0,0\n1,0\n");
  const auto X = io::read_points_csv(tmp.path / "h.csv", MetricKind::Euclidean);
  REQUIRE(X.size() == 2);
  CHECK(X.dist(0, 1) == 1.0);

  io::write_text(tmp.path / "bad.csv", "0,0\noops,0\n");
  CHECK_THROWS_AS(io::read_points_csv(tmp.path / "bad.csv", MetricKind::Euclidean),
                  std::runtime_error);
  io::write_text(tmp.path / "empty.csv", "\n\n");
  CHECK_THROWS_AS(io::read_points_csv(tmp.path / "empty.csv", MetricKind::Euclidean),
                  std::runtime_error);
  CHECK_THROWS_AS(io::read_points_csv(tmp.path / "missing.csv", MetricKind::Euclidean),
                  std::runtime_error);
}

TEST_CASE("matrix CSV shapes") {
  TempDir tmp;
  const auto X = witness_triangle(1.0, 0.3);
  io::write_matrix_csv(tmp.path / "full.csv", X);
  const auto full = io::read_matrix_csv(tmp.path / "full.csv");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(full.dist(i, j) == X.dist(i, j));

  io::write_text(tmp.path / "lower_diag.csv", "0\n1,0\n2,1.5,0\n");
  const auto with_diag = io::read_matrix_csv(tmp.path / "lower_diag.csv");
  REQUIRE(with_diag.size() == 3);
  CHECK(with_diag.dist(1, 0) == 1.0);
  CHECK(with_diag.dist(2, 0) == 2.0);
  CHECK(with_diag.dist(2, 1) == 1.5);

  io::write_text(tmp.path / "lower.csv", "1\n2,1.5\n");
  const auto without_diag = io::read_matrix_csv(tmp.path / "lower.csv");
  REQUIRE(without_diag.size() == 3);
  CHECK(without_diag.dist(1, 0) == 1.0);
  CHECK(without_diag.dist(2, 0) == 2.0);
  CHECK(without_diag.dist(2, 1) == 1.5);

  io::write_text(tmp.path / "ragged.csv", "0,1\n1,0\n0\n");
  CHECK_THROWS_AS(io::read_matrix_csv(tmp.path / "ragged.csv"), std::runtime_error);
}

TEST_CASE("barcode JSON and CSV") {
  TempDir tmp;
  const auto B = compute_barcode(build_filtration(
      FiniteMetricSpace::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, MetricKind::Euclidean),
      Convention::OpenRips));
  io::write_barcode_json(tmp.path / "b.json", B);
  const auto back = io::read_barcode_json(tmp.path / "b.json");
  REQUIRE(back.bars.size() == B.bars.size());
  for (std::size_t k = 0; k < B.bars.size(); ++k) {
    CHECK(back.bars[k].dim == B.bars[k].dim);
    CHECK(back.bars[k].birth == B.bars[k].birth);
    CHECK(back.bars[k].death == B.bars[k].death);
  }
  const std::string json = slurp(tmp.path / "b.json");
  CHECK(json.find("null") != std::string::npos);  // the infinite component

  io::write_barcode_csv(tmp.path / "b.csv", B);
  const std::string csv = slurp(tmp.path / "b.csv");
  CHECK(csv.find("dim,birth,death") == 0);
  CHECK(csv.find("inf") != std::string::npos);
}

TEST_CASE("filtration CSV layout") {
  TempDir tmp;
  const auto F = build_filtration(FiniteMetricSpace::from_matrix({{0, 1}, {1, 0}}),
                                  Convention::OpenRips);
  io::write_filtration_csv(tmp.path / "f.csv", F);
  const std::string text = slurp(tmp.path / "f.csv");
  CHECK(text == "dim,v0,v1,v2,value\n0,0,,,0\n0,1,,,0\n1,0,1,,1\n");
}

TEST_CASE("records CSV layout") {
  TempDir tmp;
  std::vector<LocalMinimumRecord> records{{0, 1, 1.0, 0.25, true, 0}};
  io::write_records_csv(tmp.path / "r.csv", records);
  CHECK(slurp(tmp.path / "r.csv") == "i,j,value,epsilon,mc_group,isolated\n0,1,1,0.25,0,1\n");
}

TEST_CASE("diagram SVG is deterministic and marks every bar") {
  TempDir tmp;
  const auto B = compute_barcode(build_filtration(circle_sample(8, 1.0),
                                                  Convention::OpenRips));
  io::write_diagram_svg(tmp.path / "d1.svg", B);
  io::write_diagram_svg(tmp.path / "d2.svg", B);
  const std::string svg = slurp(tmp.path / "d1.svg");
  CHECK(svg == slurp(tmp.path / "d2.svg"));
  CHECK(svg.rfind("<svg", 0) == 0);

  std::size_t markers = 0;
  for (std::size_t pos = 0; (pos = svg.find("<circle", pos)) != std::string::npos; ++pos)
    ++markers;
  for (std::size_t pos = 0; (pos = svg.find("fill=\"#d62728\"", pos)) != std::string::npos;
       ++pos)
    ++markers;
  CHECK(markers == B.bars.size());
}
