#include "subdiv/lagrange.hpp"

#include <stdexcept>

namespace subdiv {

StencilWeights lagrange_weights(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("lagrange_weights: ratios must be positive");
  // Factored forms, kept verbatim so the uniform case evaluates to the exact
  // rationals (-7, 105, 35, -5)/128.
  const double am1 = -3.0 * (4.0 * beta + 3.0) /
                     (64.0 * (alpha * alpha + alpha) * (alpha + beta + 1.0));
  const double a0 = 3.0 * (4.0 * alpha + 1.0) * (4.0 * beta + 3.0) /
                    (64.0 * alpha * (beta + 1.0));
  const double a1 = (4.0 * alpha + 1.0) * (4.0 * beta + 3.0) /
                    (64.0 * beta * (alpha + 1.0));
  const double a2 = -3.0 * (4.0 * alpha + 1.0) /
                    (64.0 * (beta * beta + beta) * (alpha + beta + 1.0));
  return StencilWeights{{am1, a0, a1, a2}};
}

StencilWeights uniform_limit_weights() {
  return StencilWeights{
      {-7.0 / 128.0, 105.0 / 128.0, 35.0 / 128.0, -5.0 / 128.0}};
}

std::pair<Point, Point> apply_rules(double alpha, double beta, const Point& fm1,
                                    const Point& f0, const Point& f1,
                                    const Point& f2) {
  const std::size_t n = fm1.dim();
  if (f0.dim() != n || f1.dim() != n || f2.dim() != n)
    throw std::invalid_argument("apply_rules: dimension mismatch");
  const StencilWeights w0 = lagrange_weights(alpha, beta);
  const StencilWeights w1 = lagrange_weights(beta, alpha);
  Point first = combine4(w0[0], fm1, w0[1], f0, w0[2], f1, w0[3], f2);
  Point second = combine4(w1[3], fm1, w1[2], f0, w1[1], f1, w1[0], f2);
  return {std::move(first), std::move(second)};
}

std::size_t stencil_count(const PointSequence& f) {
  if (f.size() < 4)
    throw std::invalid_argument("refinement needs at least 4 points");
  return f.boundary() == Boundary::open ? f.size() - 3 : f.size();
}

PointSequence subdivide_with_ratios(
    const PointSequence& f,
    const std::function<std::pair<double, double>(std::size_t center)>&
        ratios_at) {
  const std::size_t count = stencil_count(f);
  const std::size_t first_center = f.boundary() == Boundary::open ? 1 : 0;
  std::vector<Point> out;
  out.reserve(2 * count);
  for (std::size_t s = 0; s < count; ++s) {
    const auto i = static_cast<std::ptrdiff_t>(first_center + s);
    const auto [alpha, beta] = ratios_at(first_center + s);
    auto [p0, p1] = apply_rules(alpha, beta, f.at_wrapped(i - 1),
                                f.at_wrapped(i), f.at_wrapped(i + 1),
                                f.at_wrapped(i + 2));
    out.push_back(std::move(p0));
    out.push_back(std::move(p1));
  }
  return PointSequence(std::move(out), f.boundary());
}

PointSequence lagrange_subdivide(const PointSequence& f, const Grid& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("lagrange_subdivide: |f| != |grid|");
  if (f.size() < 4)
    throw std::invalid_argument("lagrange_subdivide: need at least 4 points");
  if (f.boundary() != Boundary::open)
    throw std::invalid_argument(
        "lagrange_subdivide: grids describe open data only");
  const GridRatios r = grid_ratios(g);
  // Stencil centered at i uses alpha_i = h_{i-1}/h_i and beta_i = h_{i+1}/h_i.
  return subdivide_with_ratios(f, [&r](std::size_t i) {
    return std::make_pair(r.alpha[i - 1], r.beta[i]);
  });
}

PointSequence uniform_limit_step(const PointSequence& f) {
  return subdivide_with_ratios(
      f, [](std::size_t) { return std::make_pair(1.0, 1.0); });
}

}  // namespace subdiv
