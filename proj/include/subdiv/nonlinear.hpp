#pragma once

#include <cstddef>

#include "subdiv/geometry.hpp"
#include "subdiv/lagrange.hpp"

namespace subdiv {

/// Parameters of the non-linear refinement cascade.
struct RefineConfig {
  /// Flexibility parameter. Level k clamps the recovered interval ratios to
  /// [(1 + rho/2^k)^{-1}, 1 + rho/2^k]; rho = 0 degenerates to the uniform
  /// linear scheme.
  double rho = 2.0;
  int iterations = 5;
  Boundary boundary = Boundary::closed;
  /// Relative threshold under which the ratio-estimation determinants are
  /// treated as zero and the uniform fallback is used.
  double degeneracy_tol = 1e-12;
};

/// Coefficients (a, b) of the three-term difference combination
/// a*d_prev - d_mid + b*d_next that vanishes on samples of coordinate-wise
/// quadratics. Both are strictly positive; a = b = 1/2 on uniform spacing.
struct AnnihilationPair {
  double a;
  double b;
};

/// An estimated (left, right) interval-ratio pair, clamped for level `level`.
struct RatioPair {
  double alpha;
  double beta;
  int level;
};

/// Least-squares estimate of the annihilation coefficients from three
/// consecutive difference vectors (dimension >= 2). With
///   num_a = (d_prev.d_mid)|d_next|^2 - (d_prev.d_next)(d_next.d_mid),
///   den   = |d_prev|^2 |d_next|^2 - (d_prev.d_next)^2,
/// a = |num_a / den|, and b likewise with d_prev and d_next swapped. Whenever
/// num or den vanishes below tol relative to the difference norms (collinear
/// data, zero differences), the coefficient falls back to 1/2.
AnnihilationPair annihilation_coeffs(const Point& d_prev, const Point& d_mid,
                                     const Point& d_next, double tol);

/// Inverts the annihilation coefficients back to the interval ratios that
/// produced them, then clamps into [(1 + rho/2^level)^{-1}, 1 + rho/2^level].
/// (1/2, 1/2) maps to (1, 1) for every level and rho.
RatioPair recover_ratios(const AnnihilationPair& ab, int level, double rho);

/// The estimate-then-recover pipeline for one stencil, shared by refine_step
/// and the mask extraction so both see byte-identical ratios.
RatioPair stencil_ratios(const Point& fm1, const Point& f0, const Point& f1,
                         const Point& f2, int level, const RefineConfig& cfg);

/// One non-linear refinement step at level k: per stencil, estimate the
/// ratios from the data differences alone and apply the corresponding
/// four-point rules. Requires >= 4 points of dimension >= 2.
PointSequence refine_step(const PointSequence& f, int k,
                          const RefineConfig& cfg);

/// Runs refine_step for k = 0 .. cfg.iterations-1. Open data shrinks by 6
/// points per step and the cascade throws once fewer than 4 points remain.
PointSequence subdivide(const PointSequence& f0, const RefineConfig& cfg);

}  // namespace subdiv
