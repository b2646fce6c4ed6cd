#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "subdiv/geometry.hpp"

namespace subdiv {

/// Input error that names the offending row (0 = first data row, or npos when
/// the problem is not row-specific).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t row, const std::string& what)
      : std::runtime_error(what), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

/// Reads point data from CSV (one point per row, comma-separated reals) or
/// JSON (array of arrays; detected by a leading '['). Rows must have a
/// uniform column count >= 2 and there must be at least 4 of them.
PointSequence parse_points(std::string_view text, Boundary boundary);

/// 17-significant-digit rendering, enough to round-trip any double.
std::string format_double(double v);

/// One row per point, coordinates comma-separated at 17 significant digits.
void write_points_csv(std::ostream& os, const PointSequence& pts);

struct SvgStyle {
  std::string stroke = "#1f6fb4";
  double stroke_width = 0.0;  // 0 = scaled from the bounding box
  bool markers = false;       // draw the vertices as small dots
  std::string marker_fill = "#000000";
};

/// One polyline of an SVG document, already projected to 2D.
struct SvgPath {
  std::vector<std::array<double, 2>> pts;
  bool closed = false;
  SvgStyle style;
};

/// Standalone SVG with a shared viewBox fitted to all paths plus a 5% margin.
/// Byte-identical output for identical input.
std::string svg_document(const std::vector<SvgPath>& paths);

/// Single-polyline SVG of a 2D sequence; closed sequences emit a closed path.
std::string emit_svg(const PointSequence& poly, const SvgStyle& style = {});

/// Projection of 3D points onto a coordinate plane by dropping one axis.
SvgPath project_drop_axis(const PointSequence& pts, std::size_t drop_axis,
                          const SvgStyle& style);

}  // namespace subdiv
