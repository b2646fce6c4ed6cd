#include "subdiv/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace subdiv {

Point::Point(std::vector<double> coords) : c_(std::move(coords)) {}

Point::Point(std::initializer_list<double> coords) : c_(coords) {}

bool Point::finite() const {
  for (double v : c_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double Point::dot(const Point& other) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < c_.size(); ++i) acc += c_[i] * other.c_[i];
  return acc;
}

double Point::norm() const { return std::sqrt(squared_norm()); }

Point& Point::operator+=(const Point& rhs) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Point& Point::operator-=(const Point& rhs) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Point& Point::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Point combine4(double w0, const Point& p0, double w1, const Point& p1,
               double w2, const Point& p2, double w3, const Point& p3) {
  const std::size_t n = p0.dim();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = w0 * p0[i];
    acc += w1 * p1[i];
    acc += w2 * p2[i];
    acc += w3 * p3[i];
    out[i] = acc;
  }
  return Point(std::move(out));
}

PointSequence::PointSequence(std::vector<Point> points, Boundary boundary)
    : pts_(std::move(points)), boundary_(boundary) {
  if (pts_.empty()) return;
  const std::size_t n = pts_.front().dim();
  if (n == 0) throw std::invalid_argument("points must have dimension >= 1");
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (pts_[i].dim() != n)
      throw std::invalid_argument("point " + std::to_string(i) +
                                  " has mismatched dimension");
    if (!pts_[i].finite())
      throw std::invalid_argument("point " + std::to_string(i) +
                                  " has non-finite coordinates");
  }
}

std::size_t PointSequence::dim() const {
  return pts_.empty() ? 0 : pts_.front().dim();
}

const Point& PointSequence::at_wrapped(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(pts_.size());
  if (boundary_ == Boundary::closed) {
    std::ptrdiff_t m = i % n;
    if (m < 0) m += n;
    return pts_[static_cast<std::size_t>(m)];
  }
  if (i < 0 || i >= n) throw std::out_of_range("open sequence index");
  return pts_[static_cast<std::size_t>(i)];
}

PointSequence forward_diff(const PointSequence& f) {
  if (f.boundary() == Boundary::open) {
    if (f.size() < 2)
      throw std::invalid_argument("forward_diff: need at least 2 points");
    std::vector<Point> d;
    d.reserve(f.size() - 1);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) d.push_back(f[i + 1] - f[i]);
    return PointSequence(std::move(d), Boundary::open);
  }
  if (f.size() < 1)
    throw std::invalid_argument("forward_diff: empty sequence");
  std::vector<Point> d;
  d.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    d.push_back(f[(i + 1) % f.size()] - f[i]);
  return PointSequence(std::move(d), Boundary::closed);
}

Grid::Grid(std::vector<double> xi) : xi_(std::move(xi)) {
  for (std::size_t i = 0; i + 1 < xi_.size(); ++i) {
    if (!(xi_[i] < xi_[i + 1]))
      throw std::invalid_argument("grid must be strictly increasing (index " +
                                  std::to_string(i) + ")");
  }
}

GridRatios grid_ratios(const Grid& g) {
  if (g.size() < 3)
    throw std::invalid_argument("grid_ratios: need at least 3 grid points");
  const std::size_t steps = g.size() - 1;
  std::vector<double> h(steps);
  for (std::size_t j = 0; j < steps; ++j) h[j] = g[j + 1] - g[j];
  GridRatios r;
  r.alpha.resize(steps - 1);
  r.beta.resize(steps - 1);
  for (std::size_t j = 0; j + 1 < steps; ++j) {
    r.alpha[j] = h[j] / h[j + 1];
    r.beta[j] = h[j + 1] / h[j];
  }
  return r;
}

Grid chaikin_refine(const Grid& g) {
  if (g.size() < 2)
    throw std::invalid_argument("chaikin_refine: need at least 2 grid points");
  std::vector<double> out;
  out.reserve(2 * (g.size() - 1));
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    out.push_back(0.75 * g[i] + 0.25 * g[i + 1]);
    out.push_back(0.25 * g[i] + 0.75 * g[i + 1]);
  }
  return Grid(std::move(out));
}

Grid chaikin_limit_grid(const Grid& g, int depth) {
  if (depth < 0) throw std::invalid_argument("chaikin_limit_grid: depth < 0");
  Grid out = g;
  for (int k = 0; k < depth; ++k) out = chaikin_refine(out);
  return out;
}

}  // namespace subdiv
