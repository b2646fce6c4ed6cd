#include "subdiv/nonlinear.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace subdiv {

namespace {

double clamp_ratio(double x, double bound) {
  // max/min order matters: the lower bound wins when the interval is empty.
  return std::max(1.0 / (1.0 + bound), std::min(1.0 + bound, x));
}

}  // namespace

AnnihilationPair annihilation_coeffs(const Point& d_prev, const Point& d_mid,
                                     const Point& d_next, double tol) {
  if (d_prev.dim() < 2)
    throw std::invalid_argument("annihilation_coeffs: dimension must be >= 2");
  if (tol < 0.0)
    throw std::invalid_argument("annihilation_coeffs: tol must be >= 0");

  const double pp = d_prev.squared_norm();
  const double nn = d_next.squared_norm();
  const double pn = d_prev.dot(d_next);
  const double pm = d_prev.dot(d_mid);
  const double nm = d_next.dot(d_mid);
  const double mid_norm = d_mid.norm();

  const double den = pp * nn - pn * pn;
  const double den_scale = pp * nn;
  const bool den_zero = std::abs(den) <= tol * den_scale;

  const double num_a = pm * nn - pn * nm;
  const double num_b = nm * pp - pn * pm;
  const bool num_a_zero =
      std::abs(num_a) <= tol * (std::sqrt(pp) * mid_norm * nn);
  const bool num_b_zero =
      std::abs(num_b) <= tol * (std::sqrt(nn) * mid_norm * pp);

  AnnihilationPair ab;
  ab.a = (den_zero || num_a_zero) ? 0.5 : std::abs(num_a / den);
  ab.b = (den_zero || num_b_zero) ? 0.5 : std::abs(num_b / den);
  return ab;
}

RatioPair recover_ratios(const AnnihilationPair& ab, int level, double rho) {
  if (!(ab.a > 0.0) || !(ab.b > 0.0))
    throw std::invalid_argument("recover_ratios: coefficients must be positive");
  if (level < 0) throw std::invalid_argument("recover_ratios: level < 0");
  if (rho < 0.0) throw std::invalid_argument("recover_ratios: rho < 0");

  const double root =
      std::sqrt(ab.a * (ab.a + 1.0) * ab.b * (ab.b + 1.0));
  const double alpha_raw = 1.0 / (ab.a + root / (ab.b + 1.0));
  const double beta_raw = 1.0 / (ab.b + root / (ab.a + 1.0));

  const double bound = std::ldexp(rho, -level);  // rho / 2^level
  return RatioPair{clamp_ratio(alpha_raw, bound), clamp_ratio(beta_raw, bound),
                   level};
}

RatioPair stencil_ratios(const Point& fm1, const Point& f0, const Point& f1,
                         const Point& f2, int level, const RefineConfig& cfg) {
  const Point d_prev = f0 - fm1;
  const Point d_mid = f1 - f0;
  const Point d_next = f2 - f1;
  const AnnihilationPair ab =
      annihilation_coeffs(d_prev, d_mid, d_next, cfg.degeneracy_tol);
  return recover_ratios(ab, level, cfg.rho);
}

PointSequence refine_step(const PointSequence& f, int k,
                          const RefineConfig& cfg) {
  if (f.dim() < 2)
    throw std::invalid_argument("refine_step: dimension must be >= 2");
  if (f.size() < 4)
    throw std::invalid_argument("refine_step: need at least 4 points");
  return subdivide_with_ratios(f, [&](std::size_t center) {
    const auto i = static_cast<std::ptrdiff_t>(center);
    const RatioPair rp =
        stencil_ratios(f.at_wrapped(i - 1), f.at_wrapped(i),
                       f.at_wrapped(i + 1), f.at_wrapped(i + 2), k, cfg);
    return std::make_pair(rp.alpha, rp.beta);
  });
}

PointSequence subdivide(const PointSequence& f0, const RefineConfig& cfg) {
  if (cfg.iterations < 0)
    throw std::invalid_argument("subdivide: iterations must be >= 0");
  PointSequence f = f0;
  for (int k = 0; k < cfg.iterations; ++k) {
    if (f.size() < 4)
      throw std::runtime_error(
          "subdivide: open data exhausted after " + std::to_string(k) +
          " iterations (" + std::to_string(f.size()) + " points left)");
    f = refine_step(f, k, cfg);
  }
  return f;
}

}  // namespace subdiv
