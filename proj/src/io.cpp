#include "ripsedge/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ripsedge::io {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> tokens;
  std::string token;
  std::istringstream stream(line);
  while (std::getline(stream, token, ',')) tokens.push_back(trim(token));
  return tokens;
}

bool parse_double(const std::string& token, double& out) {
  if (token.empty()) return false;
  char* end = nullptr;
  out = std::strtod(token.c_str(), &end);
  return end == token.c_str() + token.size();
}

std::vector<std::vector<std::string>> read_rows(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    rows.push_back(split_line(line));
  }
  return rows;
}

std::vector<std::vector<double>> parse_numeric_rows(
    const std::filesystem::path& path, std::vector<std::vector<std::string>> rows) {
  if (rows.empty()) throw std::runtime_error(path.string() + ": no data rows");
  // a leading row with any non-numeric token is a header
  double probe;
  bool header = false;
  for (const auto& token : rows.front())
    if (!parse_double(token, probe)) header = true;
  if (header) rows.erase(rows.begin());
  if (rows.empty()) throw std::runtime_error(path.string() + ": no data rows after header");

  std::vector<std::vector<double>> values;
  values.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<double> row;
    row.reserve(rows[r].size());
    for (const auto& token : rows[r]) {
      double v;
      if (!parse_double(token, v))
        throw std::runtime_error(path.string() + ": bad number '" + token + "' in row " +
                                 std::to_string(r + 1));
      row.push_back(v);
    }
    values.push_back(std::move(row));
  }
  return values;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

std::vector<std::vector<double>> read_points_csv(const std::filesystem::path& path) {
  return parse_numeric_rows(path, read_rows(path));
}

FiniteMetricSpace read_points_csv(const std::filesystem::path& path, MetricKind kind) {
  return FiniteMetricSpace::from_points(read_points_csv(path), kind);
}

void write_points_csv(const std::filesystem::path& path,
                      const std::vector<std::vector<double>>& points) {
  auto out = open_out(path);
  for (const auto& p : points) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out << ',';
      out << format_double(p[k]);
    }
    out << '\n';
  }
}

FiniteMetricSpace read_matrix_csv(const std::filesystem::path& path, bool validate_triangle) {
  const auto values = parse_numeric_rows(path, read_rows(path));
  const std::size_t rows = values.size();

  bool square = true;
  bool lower = true;  // row k holds k+1 entries
  for (std::size_t k = 0; k < rows; ++k) {
    if (values[k].size() != rows) square = false;
    if (values[k].size() != k + 1) lower = false;
  }

  std::size_t n = 0;
  std::vector<std::vector<double>> matrix;
  if (square && (!lower || rows == 1)) {
    n = rows;
    matrix = values;
  } else if (lower) {
    // with diagonal (last entry of every row is d(i,i) = 0) or without
    bool with_diagonal = true;
    for (const auto& row : values)
      if (row.back() != 0.0) with_diagonal = false;
    n = with_diagonal ? rows : rows + 1;
    matrix.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < rows; ++k) {
      const std::size_t i = with_diagonal ? k : k + 1;
      for (std::size_t j = 0; j < values[k].size(); ++j) {
        if (with_diagonal && j == i) continue;
        matrix[i][j] = values[k][j];
        matrix[j][i] = values[k][j];
      }
    }
  } else {
    throw std::runtime_error(path.string() +
                             ": rows form neither a square matrix nor a lower triangle");
  }
  return FiniteMetricSpace::from_matrix(matrix, validate_triangle);
}

void write_matrix_csv(const std::filesystem::path& path, const FiniteMetricSpace& X) {
  auto out = open_out(path);
  for (int i = 0; i < X.size(); ++i) {
    for (int j = 0; j < X.size(); ++j) {
      if (j) out << ',';
      out << format_double(X.dist(i, j));
    }
    out << '\n';
  }
}

void write_filtration_csv(const std::filesystem::path& path, const Filtration& F) {
  auto out = open_out(path);
  out << "dim,v0,v1,v2,value\n";
  for (const auto& s : F.simplices) {
    out << s.dim << ',' << s.v[0] << ',';
    if (s.dim >= 1) out << s.v[1];
    out << ',';
    if (s.dim >= 2) out << s.v[2];
    out << ',' << format_double(s.value) << '\n';
  }
}

void write_barcode_json(const std::filesystem::path& path, const Barcode& B) {
  nlohmann::json bars = nlohmann::json::array();
  for (const auto& bar : B.bars) {
    nlohmann::json entry;
    entry["dim"] = bar.dim;
    entry["birth"] = bar.birth;
    entry["death"] = bar.finite() ? nlohmann::json(bar.death) : nlohmann::json(nullptr);
    bars.push_back(std::move(entry));
  }
  write_text(path, bars.dump(2) + "\n");
}

Barcode read_barcode_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json parsed = nlohmann::json::parse(in);
  Barcode B;
  for (const auto& entry : parsed) {
    Bar bar;
    bar.dim = entry.at("dim").get<int>();
    bar.birth = entry.at("birth").get<double>();
    bar.death = entry.at("death").is_null() ? kInfiniteDeath : entry.at("death").get<double>();
    B.bars.push_back(bar);
  }
  return B;
}

void write_barcode_csv(const std::filesystem::path& path, const Barcode& B) {
  auto out = open_out(path);
  out << "dim,birth,death\n";
  for (const auto& bar : B.bars)
    out << bar.dim << ',' << format_double(bar.birth) << ','
        << (bar.finite() ? format_double(bar.death) : "inf") << '\n';
}

void write_diagram_svg(const std::filesystem::path& path, const Barcode& B) {
  constexpr double size = 800.0, left = 80.0, right = 50.0, top = 60.0, bottom = 80.0;
  constexpr double rail_offset = 24.0;  // infinite deaths sit this far above the top value

  double vmax = 0.0;
  for (const auto& bar : B.bars) {
    vmax = std::max(vmax, bar.birth);
    if (bar.finite()) vmax = std::max(vmax, bar.death);
  }
  if (vmax <= 0.0) vmax = 1.0;
  vmax *= 1.05;

  const double span_x = size - left - right, span_y = size - top - bottom;
  auto px = [&](double v) { return left + v / vmax * span_x; };
  auto py = [&](double v) { return size - bottom - v / vmax * span_y; };

  char buf[256];
  std::string svg;
  auto add = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof(buf), fmt, args...);
    svg += buf;
  };

  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  svg += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  add("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n", left,
      size - bottom, left + span_x, size - bottom);
  add("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n", left,
      size - bottom, left, top);
  add("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#999999\" "
      "stroke-dasharray=\"4 3\"/>\n",
      px(0.0), py(0.0), px(vmax), py(vmax));
  // rail for infinite deaths
  add("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#bbbbbb\" "
      "stroke-dasharray=\"2 4\"/>\n",
      left, top + rail_offset, left + span_x, top + rail_offset);
  add("<text x=\"%.2f\" y=\"%.2f\" font-size=\"16\" fill=\"#555555\">inf</text>\n",
      left - 40.0, top + rail_offset + 5.0);
  add("<text x=\"%.2f\" y=\"%.2f\" font-size=\"18\">birth</text>\n", left + span_x / 2 - 20.0,
      size - bottom + 45.0);
  add("<text x=\"%.2f\" y=\"%.2f\" font-size=\"18\" transform=\"rotate(-90 %.2f %.2f)\">"
      "death</text>\n",
      left - 50.0, top + span_y / 2 + 20.0, left - 50.0, top + span_y / 2 + 20.0);
  add("<text x=\"%.2f\" y=\"%.2f\" font-size=\"14\">0</text>\n", left - 6.0,
      size - bottom + 20.0);
  add("<text x=\"%.2f\" y=\"%.2f\" font-size=\"14\">%.4g</text>\n", left + span_x - 20.0,
      size - bottom + 20.0, vmax);

  for (const auto& bar : B.bars) {
    const double x = px(bar.birth);
    const double y = bar.finite() ? py(bar.death) : top + rail_offset;
    if (bar.dim == 0) {
      add("<circle cx=\"%.2f\" cy=\"%.2f\" r=\"5\" fill=\"#1f77b4\" fill-opacity=\"0.75\"/>\n",
          x, y);
    } else {
      add("<rect x=\"%.2f\" y=\"%.2f\" width=\"9\" height=\"9\" fill=\"#d62728\" "
          "fill-opacity=\"0.75\"/>\n",
          x - 4.5, y - 4.5);
    }
  }
  svg += "</svg>\n";
  write_text(path, svg);
}

void write_records_csv(const std::filesystem::path& path,
                       const std::vector<LocalMinimumRecord>& records) {
  auto out = open_out(path);
  out << "i,j,value,epsilon,mc_group,isolated\n";
  for (const auto& rec : records)
    out << rec.i << ',' << rec.j << ',' << format_double(rec.value) << ','
        << format_double(rec.epsilon) << ',' << rec.mc_group << ',' << (rec.isolated ? 1 : 0)
        << '\n';
}

std::string verdicts_to_json(const std::vector<CriterionVerdict>& verdicts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : verdicts) {
    nlohmann::json entry;
    entry["pair"] = {v.pair.first, v.pair.second};
    entry["c"] = v.c;
    entry["witness"] = v.witness ? nlohmann::json(*v.witness) : nlohmann::json(nullptr);
    entry["predicted_in_spectrum"] = v.predicted_in_spectrum;
    entry["observed_in_spectrum"] = v.observed_in_spectrum;
    entry["agree"] = v.agree;
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

std::string ledger_to_json(const BoundLedger& ledger) {
  nlohmann::json out;
  out["rows"] = nlohmann::json::array();
  for (const auto& row : ledger.rows)
    out["rows"].push_back({{"scale", row.scale},
                           {"mc_size", row.mc_size},
                           {"dh1", row.dh1},
                           {"dh0_drop", row.dh0_drop},
                           {"slack", row.slack}});
  out["global"] = nlohmann::json::array();
  for (const auto& row : ledger.global)
    out["global"].push_back(
        {{"r", row.r}, {"h1_rank", row.h1_rank}, {"bound", row.bound}, {"ok", row.ok}});
  out["all_nonnegative"] = ledger.all_nonnegative();
  out["global_ok"] = ledger.global_ok();
  return out.dump(2) + "\n";
}

std::string containment_to_json(const ContainmentReport& report) {
  nlohmann::json out;
  out["epsilon"] = report.epsilon;
  out["scales_checked"] = report.scales_checked;
  out["violations"] = nlohmann::json::array();
  for (const auto& v : report.violations)
    out["violations"].push_back(
        {{"filtration", v.filtration}, {"dim", v.dim}, {"scale", v.scale}});
  out["ok"] = report.ok();
  return out.dump(2) + "\n";
}

std::string detection_to_json(const std::vector<DetectionEntry>& entries) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries)
    arr.push_back({{"pair", {e.i, e.j}},
                   {"value", e.value},
                   {"h0_detected", e.h0_detected},
                   {"h1_detected", e.h1_detected},
                   {"detected", e.detected()}});
  return arr.dump(2) + "\n";
}

std::string spectra_to_json(const SpectrumReport& spectra) {
  nlohmann::json out;
  out["h0_merge_scales"] = spectra.h0_merge_scales;
  out["h1_birth_scales"] = spectra.h1_birth_scales;
  out["deltas"] = nlohmann::json::array();
  for (const auto& d : spectra.deltas)
    out["deltas"].push_back(
        {{"scale", d.scale}, {"h0_change", d.h0_change}, {"h1_change", d.h1_change}});
  return out.dump(2) + "\n";
}

void write_verdicts_csv(const std::filesystem::path& path,
                        const std::vector<CriterionVerdict>& verdicts) {
  auto out = open_out(path);
  out << "i,j,c,witness,predicted_in_spectrum,observed_in_spectrum,agree\n";
  for (const auto& v : verdicts) {
    out << v.pair.first << ',' << v.pair.second << ',' << format_double(v.c) << ',';
    if (v.witness) out << *v.witness;
    out << ',' << (v.predicted_in_spectrum ? 1 : 0) << ',' << (v.observed_in_spectrum ? 1 : 0)
        << ',' << (v.agree ? 1 : 0) << '\n';
  }
}

void write_ledger_csv(const std::filesystem::path& path, const BoundLedger& ledger) {
  auto out = open_out(path);
  out << "scale,mc_size,dh1,dh0_drop,slack\n";
  for (const auto& row : ledger.rows)
    out << format_double(row.scale) << ',' << row.mc_size << ',' << row.dh1 << ','
        << row.dh0_drop << ',' << row.slack << '\n';
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
}

}  // namespace ripsedge::io
