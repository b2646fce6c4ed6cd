#include "subdiv/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <utility>

#include "json.hpp"

namespace subdiv {

namespace {

constexpr std::size_t kNoRow = static_cast<std::size_t>(-1);

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_cell(std::string_view cell, std::size_t row) {
  cell = trim(cell);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size())
    throw ParseError(row, "row " + std::to_string(row + 1) +
                              ": non-numeric cell '" + std::string(cell) + "'");
  if (!std::isfinite(value))
    throw ParseError(row, "row " + std::to_string(row + 1) +
                              ": non-finite value");
  return value;
}

PointSequence finish(std::vector<Point> rows, Boundary boundary) {
  if (rows.size() < 4)
    throw ParseError(kNoRow, "need at least 4 points, got " +
                                 std::to_string(rows.size()));
  if (rows.front().dim() < 2)
    throw ParseError(kNoRow, "points must have dimension >= 2");
  return PointSequence(std::move(rows), boundary);
}

PointSequence parse_csv(std::string_view text, Boundary boundary) {
  std::vector<Point> rows;
  std::size_t cols = 0;
  std::size_t row = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;

    std::vector<double> coords;
    std::size_t cell_start = 0;
    while (true) {
      const std::size_t comma = line.find(',', cell_start);
      const std::size_t cell_end = comma == std::string_view::npos ? line.size() : comma;
      coords.push_back(parse_cell(line.substr(cell_start, cell_end - cell_start), row));
      if (comma == std::string_view::npos) break;
      cell_start = comma + 1;
    }
    if (cols == 0) {
      cols = coords.size();
    } else if (coords.size() != cols) {
      throw ParseError(row, "row " + std::to_string(row + 1) + ": expected " +
                                std::to_string(cols) + " columns, got " +
                                std::to_string(coords.size()));
    }
    rows.emplace_back(std::move(coords));
    ++row;
  }
  return finish(std::move(rows), boundary);
}

PointSequence parse_json(std::string_view text, Boundary boundary) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(kNoRow, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array())
    throw ParseError(kNoRow, "JSON input must be an array of arrays");
  std::vector<Point> rows;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < doc.size(); ++r) {
    const auto& item = doc[r];
    if (!item.is_array())
      throw ParseError(r, "row " + std::to_string(r + 1) + ": not an array");
    std::vector<double> coords;
    for (const auto& cell : item) {
      if (!cell.is_number())
        throw ParseError(r, "row " + std::to_string(r + 1) +
                                ": non-numeric cell");
      coords.push_back(cell.get<double>());
    }
    if (cols == 0) {
      cols = coords.size();
    } else if (coords.size() != cols) {
      throw ParseError(r, "row " + std::to_string(r + 1) + ": expected " +
                              std::to_string(cols) + " columns, got " +
                              std::to_string(coords.size()));
    }
    rows.emplace_back(std::move(coords));
  }
  return finish(std::move(rows), boundary);
}

void append_coord(std::string& out, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  out += buf;
}

}  // namespace

PointSequence parse_points(std::string_view text, Boundary boundary) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    throw ParseError(kNoRow, "empty input");
  if (text[first] == '[') return parse_json(text, boundary);
  return parse_csv(text, boundary);
}

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_points_csv(std::ostream& os, const PointSequence& pts) {
  for (const Point& p : pts) {
    for (std::size_t j = 0; j < p.dim(); ++j) {
      if (j) os << ',';
      os << format_double(p[j]);
    }
    os << '\n';
  }
}

std::string svg_document(const std::vector<SvgPath>& paths) {
  bool any = false;
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const SvgPath& path : paths) {
    for (const auto& p : path.pts) {
      if (!any) {
        min_x = max_x = p[0];
        min_y = max_y = p[1];
        any = true;
      } else {
        min_x = std::min(min_x, p[0]);
        max_x = std::max(max_x, p[0]);
        min_y = std::min(min_y, p[1]);
        max_y = std::max(max_y, p[1]);
      }
    }
  }
  if (!any) throw std::invalid_argument("svg_document: no points");

  double span_x = max_x - min_x;
  double span_y = max_y - min_y;
  const double pad_base = std::max(span_x, span_y);
  const double pad = pad_base > 0.0 ? 0.05 * pad_base : 1.0;
  min_x -= pad;
  min_y -= pad;
  span_x += 2 * pad;
  span_y += 2 * pad;
  // SVG y grows downward; mirror the y coordinates inside the box instead of
  // emitting a transform so the path data stays plain.
  const double y_top = min_y + span_y;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  append_coord(out, min_x);
  out += ' ';
  append_coord(out, 0.0);
  out += ' ';
  append_coord(out, span_x);
  out += ' ';
  append_coord(out, span_y);
  out += "\" width=\"720\" height=\"";
  append_coord(out, 720.0 * span_y / span_x);
  out += "\">\n";

  const double default_width = 0.0025 * std::max(span_x, span_y);
  for (const SvgPath& path : paths) {
    if (path.pts.empty()) continue;
    out += "  <path d=\"";
    for (std::size_t i = 0; i < path.pts.size(); ++i) {
      out += i == 0 ? "M " : " L ";
      append_coord(out, path.pts[i][0]);
      out += ' ';
      append_coord(out, y_top - path.pts[i][1]);
    }
    if (path.closed) out += " Z";
    out += "\" fill=\"none\" stroke=\"";
    out += path.style.stroke;
    out += "\" stroke-width=\"";
    append_coord(out, path.style.stroke_width > 0.0 ? path.style.stroke_width
                                                    : default_width);
    out += "\"/>\n";
    if (path.style.markers) {
      const double r = 2.5 * default_width;
      for (const auto& p : path.pts) {
        out += "  <circle cx=\"";
        append_coord(out, p[0]);
        out += "\" cy=\"";
        append_coord(out, y_top - p[1]);
        out += "\" r=\"";
        append_coord(out, r);
        out += "\" fill=\"";
        out += path.style.marker_fill;
        out += "\"/>\n";
      }
    }
  }
  out += "</svg>\n";
  return out;
}

std::string emit_svg(const PointSequence& poly, const SvgStyle& style) {
  if (poly.empty()) throw std::invalid_argument("emit_svg: empty sequence");
  if (poly.dim() != 2)
    throw std::invalid_argument("emit_svg: expects 2D points (project first)");
  SvgPath path;
  path.closed = poly.boundary() == Boundary::closed;
  path.style = style;
  path.pts.reserve(poly.size());
  for (const Point& p : poly) path.pts.push_back({p[0], p[1]});
  return svg_document({path});
}

SvgPath project_drop_axis(const PointSequence& pts, std::size_t drop_axis,
                          const SvgStyle& style) {
  if (pts.dim() != 3)
    throw std::invalid_argument("project_drop_axis: expects 3D points");
  if (drop_axis > 2)
    throw std::invalid_argument("project_drop_axis: axis out of range");
  SvgPath path;
  path.closed = pts.boundary() == Boundary::closed;
  path.style = style;
  path.pts.reserve(pts.size());
  for (const Point& p : pts) {
    std::array<double, 2> q{};
    std::size_t t = 0;
    for (std::size_t a = 0; a < 3; ++a)
      if (a != drop_axis) q[t++] = p[a];
    path.pts.push_back(q);
  }
  return path;
}

}  // namespace subdiv
