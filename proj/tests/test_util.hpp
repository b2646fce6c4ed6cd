#pragma once

// Shared generators and independent oracles for the test suites. Everything
// here is deliberately written against the math directly (polynomial
// evaluation, cross products, the closed-form coefficient maps) so it never
// goes through the library's refinement path.

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "subdiv/geometry.hpp"

namespace testutil {

using subdiv::Boundary;
using subdiv::Grid;
using subdiv::Point;
using subdiv::PointSequence;

using Rng = std::mt19937_64;

// ---- grids ----------------------------------------------------------------

// Strictly increasing grid whose consecutive step ratios are log-uniform in
// [ratio_lo, ratio_hi], with the absolute step kept inside [1e-2, 1e2].
inline Grid random_grid(Rng& rng, std::size_t len, double ratio_lo,
                        double ratio_hi) {
  std::uniform_real_distribution<double> start(-2.0, 2.0);
  std::uniform_real_distribution<double> log_ratio(std::log(ratio_lo),
                                                   std::log(ratio_hi));
  std::uniform_real_distribution<double> first_step(0.5, 2.0);
  std::vector<double> xi(len);
  xi[0] = start(rng);
  double h = first_step(rng);
  for (std::size_t i = 1; i < len; ++i) {
    xi[i] = xi[i - 1] + h;
    double next = h * std::exp(log_ratio(rng));
    while (next < 1e-2 || next > 1e2) next = h * std::exp(log_ratio(rng));
    h = next;
  }
  return Grid(std::move(xi));
}

// Ratio-banded grid for reproduction checks: consecutive step ratios are
// log-uniform in [(1+rho)^{-1}, 1+rho], the steps stay within 4x of the first
// step either way, and the grid is rescaled to span 4 starting near the
// origin. The bounded spread keeps the difference vectors well-conditioned so
// tight tolerances are meaningful.
inline Grid banded_grid(Rng& rng, std::size_t len, double rho) {
  std::uniform_real_distribution<double> start(-1.0, 1.0);
  const double band = std::log(1.0 + rho);
  std::uniform_real_distribution<double> log_ratio(-band, band);
  std::vector<double> h(len - 1);
  h[0] = 1.0;
  double lh = 0.0;
  for (std::size_t i = 1; i < h.size(); ++i) {
    double next = lh + log_ratio(rng);
    while (std::abs(next) > std::log(4.0)) next = lh + log_ratio(rng);
    lh = next;
    h[i] = std::exp(lh);
  }
  double total = 0.0;
  for (double v : h) total += v;
  std::vector<double> xi(len);
  xi[0] = start(rng);
  for (std::size_t i = 0; i + 1 < len; ++i) xi[i + 1] = xi[i] + 4.0 * h[i] / total;
  return Grid(std::move(xi));
}

// ---- polynomial curves (independent evaluation oracle) ---------------------

// F : R -> R^n with polynomial coordinates, evaluated by Horner's rule.
struct PolyCurve {
  // coeffs[d][j] = coefficient of x^j in coordinate d
  std::vector<std::vector<double>> coeffs;

  Point eval(double x) const {
    std::vector<double> out(coeffs.size());
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      double acc = 0.0;
      for (std::size_t j = coeffs[d].size(); j-- > 0;)
        acc = acc * x + coeffs[d][j];
      out[d] = acc;
    }
    return Point(std::move(out));
  }

  PointSequence sample(const Grid& g) const {
    std::vector<Point> pts;
    pts.reserve(g.size());
    for (double x : g.values()) pts.push_back(eval(x));
    return PointSequence(std::move(pts), Boundary::open);
  }
};

inline PolyCurve random_poly(Rng& rng, int degree, std::size_t dim) {
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  PolyCurve f;
  f.coeffs.resize(dim);
  for (auto& c : f.coeffs) {
    c.resize(static_cast<std::size_t>(degree) + 1);
    for (double& v : c) v = coef(rng);
  }
  return f;
}

// Quadratic in R^dim whose image is not contained in a line: the linear and
// quadratic coefficient vectors are kept solidly sized and independent.
inline PolyCurve random_nondegenerate_quadratic(Rng& rng, std::size_t dim) {
  for (;;) {
    PolyCurve f = random_poly(rng, 2, dim);
    double lin2 = 0.0, quad2 = 0.0, mixed = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      lin2 += f.coeffs[d][1] * f.coeffs[d][1];
      quad2 += f.coeffs[d][2] * f.coeffs[d][2];
      mixed += f.coeffs[d][1] * f.coeffs[d][2];
    }
    const double gram = lin2 * quad2 - mixed * mixed;
    if (lin2 > 0.3 && quad2 > 0.3 && gram > 0.2 * lin2 * quad2) return f;
  }
}

// ---- closed-form coefficient maps ------------------------------------------

// Annihilation coefficients as a function of the true grid ratios.
inline std::pair<double, double> annihilation_from_ratios(double alpha,
                                                          double beta) {
  const double s = alpha + beta + 2.0;
  return {(beta + 1.0) / (alpha * s), (alpha + 1.0) / (beta * s)};
}

// Planar cross-product form of the coefficient estimate (n = 2 only).
inline double cross2(const Point& a, const Point& b) {
  return a[0] * b[1] - a[1] * b[0];
}

inline std::pair<double, double> annihilation_2d_oracle(const Point& dm1,
                                                        const Point& d0,
                                                        const Point& d1) {
  const double det_prev_next = cross2(dm1, d1);
  const double det_mid_next = cross2(d0, d1);
  const double det_mid_prev = cross2(d0, dm1);
  const double a = det_prev_next * det_mid_next == 0.0
                       ? 0.5
                       : std::abs(det_mid_next / det_prev_next);
  const double b = det_prev_next * det_mid_prev == 0.0
                       ? 0.5
                       : std::abs(det_mid_prev / det_prev_next);
  return {a, b};
}

// ---- random data and transforms --------------------------------------------

inline PointSequence random_data(Rng& rng, std::size_t count, std::size_t dim,
                                 Boundary boundary) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> c(dim);
    for (double& v : c) v = coord(rng);
    pts.emplace_back(std::move(c));
  }
  return PointSequence(std::move(pts), boundary);
}

// Random rotation matrix (2x2 or 3x3), row-major.
inline std::vector<std::vector<double>> random_rotation(Rng& rng,
                                                        std::size_t dim) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  if (dim == 2) {
    const double t = angle(rng);
    return {{std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}};
  }
  // three Givens rotations
  const double a = angle(rng), b = angle(rng), c = angle(rng);
  const double ca = std::cos(a), sa = std::sin(a);
  const double cb = std::cos(b), sb = std::sin(b);
  const double cc = std::cos(c), sc = std::sin(c);
  return {{cb * cc, cb * sc * sa - sb * ca, cb * sc * ca + sb * sa},
          {sb * cc, sb * sc * sa + cb * ca, sb * sc * ca - cb * sa},
          {-sc, cc * sa, cc * ca}};
}

inline Point apply_matrix(const std::vector<std::vector<double>>& m,
                          const Point& p) {
  std::vector<double> out(m.size(), 0.0);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) out[r] += m[r][c] * p[c];
  return Point(std::move(out));
}

inline PointSequence similarity_transform(
    const PointSequence& f, double mu,
    const std::vector<std::vector<double>>& rot, const Point& shift) {
  std::vector<Point> pts;
  pts.reserve(f.size());
  for (const Point& p : f) pts.push_back(mu * apply_matrix(rot, p) + shift);
  return PointSequence(std::move(pts), f.boundary());
}

// ---- comparisons ------------------------------------------------------------

inline double sup_point_distance(const PointSequence& a,
                                 const PointSequence& b) {
  double sup = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sup = std::max(sup, (a[i] - b[i]).norm());
  return sup;
}

inline double sup_point_norm(const PointSequence& a) {
  double sup = 0.0;
  for (const Point& p : a) sup = std::max(sup, p.norm());
  return sup;
}

// Sup distance over the sequences, relative to the sup magnitude of `ref`.
inline double relative_sup_error(const PointSequence& ref,
                                 const PointSequence& got) {
  return sup_point_distance(ref, got) / std::max(1.0, sup_point_norm(ref));
}

}  // namespace testutil
