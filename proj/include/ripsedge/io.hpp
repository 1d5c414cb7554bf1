#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ripsedge/analysis.hpp"
#include "ripsedge/filtration.hpp"
#include "ripsedge/metric_space.hpp"
#include "ripsedge/minima.hpp"
#include "ripsedge/persistence.hpp"

namespace ripsedge::io {

/// Doubles are written with 17 significant digits so every value
/// round-trips exactly.
std::string format_double(double x);

/// Point cloud: one point per row, columns are coordinates, optional header
/// row (detected by non-numeric tokens). Throws std::runtime_error on
/// unreadable files or malformed rows.
std::vector<std::vector<double>> read_points_csv(const std::filesystem::path& path);
FiniteMetricSpace read_points_csv(const std::filesystem::path& path, MetricKind kind);
void write_points_csv(const std::filesystem::path& path,
                      const std::vector<std::vector<double>>& points);

/// Distance matrix: full square, lower triangle with diagonal, or lower
/// triangle without diagonal — told apart by row lengths.
FiniteMetricSpace read_matrix_csv(const std::filesystem::path& path,
                                  bool validate_triangle = false);
void write_matrix_csv(const std::filesystem::path& path, const FiniteMetricSpace& X);

/// Columns (dim, v0, v1, v2, value); vertex columns beyond the simplex
/// dimension stay blank.
void write_filtration_csv(const std::filesystem::path& path, const Filtration& F);

/// JSON array of {dim, birth, death}, death null for infinite bars.
void write_barcode_json(const std::filesystem::path& path, const Barcode& B);
void write_barcode_csv(const std::filesystem::path& path, const Barcode& B);
Barcode read_barcode_json(const std::filesystem::path& path);

/// Persistence diagram as a standalone SVG: fixed 800x800 viewport, axes
/// spanning 0..max finite value x 1.05, diagonal reference line, one marker
/// per bar, infinite deaths on a rail above the axis range.
void write_diagram_svg(const std::filesystem::path& path, const Barcode& B);

void write_records_csv(const std::filesystem::path& path,
                       const std::vector<LocalMinimumRecord>& records);

std::string verdicts_to_json(const std::vector<CriterionVerdict>& verdicts);
std::string ledger_to_json(const BoundLedger& ledger);
std::string containment_to_json(const ContainmentReport& report);
std::string detection_to_json(const std::vector<DetectionEntry>& entries);
std::string spectra_to_json(const SpectrumReport& spectra);
void write_verdicts_csv(const std::filesystem::path& path,
                        const std::vector<CriterionVerdict>& verdicts);
void write_ledger_csv(const std::filesystem::path& path, const BoundLedger& ledger);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace ripsedge::io
