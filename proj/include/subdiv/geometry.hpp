#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace subdiv {

/// Boundary handling for finite point sequences. Open sequences lose the
/// stencils that would reach past the ends; closed sequences wrap around.
enum class Boundary { open, closed };

/// A point in R^n, n >= 1.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  const std::vector<double>& coords() const { return c_; }

  bool finite() const;
  double dot(const Point& other) const;
  double squared_norm() const { return dot(*this); }
  double norm() const;

  Point& operator+=(const Point& rhs);
  Point& operator-=(const Point& rhs);
  Point& operator*=(double s);

  friend Point operator+(Point lhs, const Point& rhs) { return lhs += rhs; }
  friend Point operator-(Point lhs, const Point& rhs) { return lhs -= rhs; }
  friend Point operator*(double s, Point rhs) { return rhs *= s; }
  friend bool operator==(const Point& a, const Point& b) { return a.c_ == b.c_; }

 private:
  std::vector<double> c_;
};

/// w0*p0 + w1*p1 + w2*p2 + w3*p3, accumulated left to right so that every
/// caller combining the same weights gets bitwise-identical results.
Point combine4(double w0, const Point& p0, double w1, const Point& p1,
               double w2, const Point& p2, double w3, const Point& p3);

/// Finite ordered point data with a boundary mode. All points share one
/// dimension and all coordinates are finite; both are checked on construction.
class PointSequence {
 public:
  PointSequence() = default;
  PointSequence(std::vector<Point> points, Boundary boundary);

  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  std::size_t dim() const;
  Boundary boundary() const { return boundary_; }

  const Point& operator[](std::size_t i) const { return pts_[i]; }
  /// Index with wrap-around in closed mode; throws out_of_range when an open
  /// sequence is indexed outside its range.
  const Point& at_wrapped(std::ptrdiff_t i) const;

  const std::vector<Point>& points() const { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

 private:
  std::vector<Point> pts_;
  Boundary boundary_ = Boundary::open;
};

/// Consecutive differences f_{i+1} - f_i. Open mode maps N points to N-1
/// differences; closed mode wraps and keeps the length (the differences then
/// sum to zero).
PointSequence forward_diff(const PointSequence& f);

/// A strictly increasing parameter grid. Grids only ever appear on the test
/// and experiment side; the refinement schemes never read one.
class Grid {
 public:
  Grid() = default;
  explicit Grid(std::vector<double> xi);

  std::size_t size() const { return xi_.size(); }
  double operator[](std::size_t i) const { return xi_[i]; }
  const std::vector<double>& values() const { return xi_; }

 private:
  std::vector<double> xi_;
};

/// Ratios of adjacent grid intervals. For a grid of L points there are L-2
/// interior ratio pairs; with steps h_j = xi_{j+1} - xi_j,
///   alpha[j] = h_j / h_{j+1}   (ratio looking left from interval j+1),
///   beta[j]  = h_{j+1} / h_j   (ratio looking right from interval j),
/// so beta[j] * alpha[j] == 1 for every j.
struct GridRatios {
  std::vector<double> alpha;
  std::vector<double> beta;
};

GridRatios grid_ratios(const Grid& g);

/// One corner-cutting refinement of the grid: each interval [xi_i, xi_{i+1}]
/// is replaced by the pair of points at its 1/4 and 3/4 positions. L points
/// become 2(L-1), still strictly increasing.
Grid chaikin_refine(const Grid& g);

/// `depth` applications of chaikin_refine; approximates the limit
/// parametrization of the corner-cutting cascade.
Grid chaikin_limit_grid(const Grid& g, int depth);

}  // namespace subdiv
