#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <utility>

#include "subdiv/geometry.hpp"

namespace subdiv {

/// The four coefficients (a_{-1}, a_0, a_1, a_2) combining a stencil
/// f_{-1}, f_0, f_1, f_2 into one refined point. They always sum to 1.
struct StencilWeights {
  std::array<double, 4> w;
  double operator[](std::size_t i) const { return w[i]; }
  double sum() const { return w[0] + w[1] + w[2] + w[3]; }
};

/// Cubic-interpolation weights for the refined point at the 1/4 position of
/// the central interval, for interval-length ratios alpha (left) and beta
/// (right). alpha = beta = 1 gives the classical uniform four-point dual
/// weights (-7, 105, 35, -5)/128.
StencilWeights lagrange_weights(double alpha, double beta);

/// Uniform-limit weights, lagrange_weights(1, 1): (-7, 105, 35, -5)/128.
StencilWeights uniform_limit_weights();

/// Both refined points of one stencil. The first lands at the 1/4 position of
/// the interval [f_0, f_1], the second at the 3/4 position; the second rule is
/// the first with the data reversed and the ratio roles swapped.
std::pair<Point, Point> apply_rules(double alpha, double beta, const Point& fm1,
                                    const Point& f0, const Point& f1,
                                    const Point& f2);

/// Number of stencils one refinement step runs over: N-3 for open data
/// (stencil centers 1..N-3), N for closed data.
std::size_t stencil_count(const PointSequence& f);

/// Shared refinement kernel: applies apply_rules at every stencil, with the
/// (alpha, beta) pair supplied per stencil center. Open data shrinks to
/// 2(N-3) points, closed data doubles to 2N.
PointSequence subdivide_with_ratios(
    const PointSequence& f,
    const std::function<std::pair<double, double>(std::size_t center)>&
        ratios_at);

/// One step of the grid-driven linear scheme: (alpha_i, beta_i) are taken
/// from the ratios of the supplied grid. Requires |f| == |g| >= 4. Maps
/// samples of any coordinate-wise cubic on g to its samples on
/// chaikin_refine(g).
PointSequence lagrange_subdivide(const PointSequence& f, const Grid& g);

/// One step of the uniform-limit linear scheme (alpha = beta = 1 everywhere).
PointSequence uniform_limit_step(const PointSequence& f);

}  // namespace subdiv
