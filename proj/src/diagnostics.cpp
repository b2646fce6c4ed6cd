#include "subdiv/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "subdiv/lagrange.hpp"

namespace subdiv {

namespace {

double sup_distance(const PointSequence& a, const PointSequence& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("sup_distance: length mismatch");
  double sup = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sup = std::max(sup, (a[i] - b[i]).norm());
  return sup;
}

double sup_norm(const PointSequence& a) {
  double sup = 0.0;
  for (const Point& p : a) sup = std::max(sup, p.norm());
  return sup;
}

// Dense Laurent polynomial over a fixed exponent window.
class Laurent {
 public:
  Laurent(int lo, int hi) : lo_(lo), c_(static_cast<std::size_t>(hi - lo + 1)) {}

  void add_mask(const MaskSet::Mask& mask, int shift, double factor) {
    for (int s = 0; s < MaskSet::kSupportLen; ++s) {
      const int e = MaskSet::kSupportMin + s + shift;
      c_[static_cast<std::size_t>(e - lo_)] += factor * mask[static_cast<std::size_t>(s)];
    }
  }

  // r-th derivative evaluated at z = sign (+1 or -1).
  double derivative_at(int r, int sign) const {
    double acc = 0.0;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      const int e = lo_ + static_cast<int>(j);
      double ff = 1.0;  // falling factorial e (e-1) ... (e-r+1)
      for (int t = 0; t < r; ++t) ff *= static_cast<double>(e - t);
      const int pow_exp = e - r;
      const double z_pow = (sign > 0 || pow_exp % 2 == 0) ? 1.0 : -1.0;
      acc += c_[j] * ff * z_pow;
    }
    return acc;
  }

 private:
  int lo_;
  std::vector<double> c_;
};

double binomial(int m, int j) {
  double v = 1.0;
  for (int t = 0; t < j; ++t) v = v * static_cast<double>(m - t) / (t + 1.0);
  return v;
}

}  // namespace

MaskSet::MaskSet(std::vector<Mask> stencil_masks, int level, Boundary boundary)
    : masks_(std::move(stencil_masks)), level_(level), boundary_(boundary) {
  if (masks_.empty()) throw std::invalid_argument("MaskSet: no masks");
}

PointSequence MaskSet::apply(const PointSequence& g) const {
  const std::size_t expected =
      boundary_ == Boundary::open ? masks_.size() + 3 : masks_.size();
  if (g.size() != expected)
    throw std::invalid_argument("MaskSet::apply: data length mismatch");
  if (g.boundary() != boundary_)
    throw std::invalid_argument("MaskSet::apply: boundary mismatch");

  const std::size_t first_center = boundary_ == Boundary::open ? 1 : 0;
  std::vector<Point> out;
  out.reserve(2 * masks_.size());
  for (std::size_t s = 0; s < masks_.size(); ++s) {
    const Mask& m = masks_[s];
    const auto i = static_cast<std::ptrdiff_t>(first_center + s);
    const Point& fm1 = g.at_wrapped(i - 1);
    const Point& f0 = g.at_wrapped(i);
    const Point& f1 = g.at_wrapped(i + 1);
    const Point& f2 = g.at_wrapped(i + 2);
    // Same evaluation order as apply_rules: even offsets 2,0,-2,-4 then odd
    // offsets 3,1,-1,-3, pairing mask slots with f_{-1},f_0,f_1,f_2.
    out.push_back(combine4(m[6], fm1, m[4], f0, m[2], f1, m[0], f2));
    out.push_back(combine4(m[7], fm1, m[5], f0, m[3], f1, m[1], f2));
  }
  return PointSequence(std::move(out), boundary_);
}

const MaskSet::Mask& MaskSet::uniform_limit_mask() {
  static const Mask b_star = {
      -5.0 / 128.0, -7.0 / 128.0, 35.0 / 128.0,  105.0 / 128.0,
      105.0 / 128.0, 35.0 / 128.0, -7.0 / 128.0, -5.0 / 128.0};
  return b_star;
}

MaskSet masks_for_step(const PointSequence& f, int k, const RefineConfig& cfg) {
  if (f.dim() < 2)
    throw std::invalid_argument("masks_for_step: dimension must be >= 2");
  const std::size_t count = stencil_count(f);
  const std::size_t first_center = f.boundary() == Boundary::open ? 1 : 0;
  std::vector<MaskSet::Mask> masks(count);
  for (std::size_t s = 0; s < count; ++s) {
    const auto i = static_cast<std::ptrdiff_t>(first_center + s);
    const RatioPair rp =
        stencil_ratios(f.at_wrapped(i - 1), f.at_wrapped(i),
                       f.at_wrapped(i + 1), f.at_wrapped(i + 2), k, cfg);
    const StencilWeights w0 = lagrange_weights(rp.alpha, rp.beta);
    const StencilWeights w1 = lagrange_weights(rp.beta, rp.alpha);
    MaskSet::Mask& m = masks[s];
    m[6] = w0[0];  // offset  2, weight on f_{-1} of the even rule
    m[4] = w0[1];  // offset  0
    m[2] = w0[2];  // offset -2
    m[0] = w0[3];  // offset -4
    m[7] = w1[3];  // offset  3, weight on f_{-1} of the odd rule
    m[5] = w1[2];  // offset  1
    m[3] = w1[1];  // offset -1
    m[1] = w1[0];  // offset -3
  }
  return MaskSet(std::move(masks), k, f.boundary());
}

std::vector<SymbolValue> property_a_residuals(const MaskSet& m, int order,
                                              int derivative) {
  if (order < 1) throw std::invalid_argument("property_a_residuals: order < 1");
  if (derivative < 0 || derivative >= order)
    throw std::invalid_argument("property_a_residuals: need 0 <= r < order");

  const auto outputs = static_cast<std::ptrdiff_t>(m.output_count());
  std::vector<SymbolValue> values;
  const std::ptrdiff_t first =
      m.boundary() == Boundary::open ? order : 0;
  for (std::ptrdiff_t i = first; i < outputs; ++i) {
    Laurent d(MaskSet::kSupportMin, MaskSet::kSupportMin +
                                        MaskSet::kSupportLen - 1 + order);
    for (int j = 0; j <= order; ++j) {
      std::ptrdiff_t src = i - j;
      if (m.boundary() == Boundary::closed) src = (src % outputs + outputs) % outputs;
      const double factor = (j % 2 == 0 ? 1.0 : -1.0) * binomial(order, j);
      d.add_mask(m.output_mask(static_cast<std::size_t>(src)), j, factor);
    }
    for (int sign : {+1, -1}) {
      values.push_back(SymbolValue{d.derivative_at(derivative, sign),
                                   static_cast<std::size_t>(i), m.level(),
                                   order, derivative, sign});
    }
  }
  return values;
}

double asymptotic_gap(const MaskSet& m) {
  const MaskSet::Mask& ref = MaskSet::uniform_limit_mask();
  double sup = 0.0;
  for (std::size_t s = 0; s < m.stencil_count(); ++s) {
    const MaskSet::Mask& mask = m.stencil_mask(s);
    for (std::size_t j = 0; j < mask.size(); ++j)
      sup = std::max(sup, std::abs(mask[j] - ref[j]));
  }
  return sup;
}

double perturbation_residual(const PointSequence& f, int k,
                             const RefineConfig& cfg) {
  return sup_distance(refine_step(f, k, cfg), uniform_limit_step(f));
}

std::vector<double> diff_decay(const PointSequence& f0,
                               const RefineConfig& cfg) {
  std::vector<double> norms;
  norms.reserve(static_cast<std::size_t>(cfg.iterations) + 1);
  PointSequence f = f0;
  norms.push_back(sup_norm(forward_diff(f)));
  for (int k = 0; k < cfg.iterations; ++k) {
    f = refine_step(f, k, cfg);
    norms.push_back(sup_norm(forward_diff(f)));
  }
  return norms;
}

std::vector<double> reproduction_error(const PointSequence& reference,
                                       const PointSequence& refined) {
  if (reference.size() != refined.size())
    throw std::invalid_argument("reproduction_error: length mismatch");
  std::vector<double> err(reference.size());
  for (std::size_t i = 0; i < reference.size(); ++i)
    err[i] = (reference[i] - refined[i]).norm();
  return err;
}

std::vector<double> menger_curvature(const PointSequence& poly) {
  if (poly.size() < 3)
    throw std::invalid_argument("menger_curvature: need at least 3 points");
  const bool closed = poly.boundary() == Boundary::closed;
  const std::size_t count = closed ? poly.size() : poly.size() - 2;
  std::vector<double> kappa(count);
  for (std::size_t t = 0; t < count; ++t) {
    const auto i = static_cast<std::ptrdiff_t>(closed ? t : t + 1);
    const Point& p = poly.at_wrapped(i - 1);
    const Point& q = poly.at_wrapped(i);
    const Point& r = poly.at_wrapped(i + 1);
    const Point u = q - p;
    const Point v = r - q;
    const Point w = r - p;
    const double lu = u.norm(), lv = v.norm(), lw = w.norm();
    if (lu == 0.0 || lv == 0.0 || lw == 0.0) {
      kappa[t] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    // 2*area from the Gram determinant of two triangle edges.
    const double gram =
        std::max(0.0, u.squared_norm() * w.squared_norm() -
                          u.dot(w) * u.dot(w));
    kappa[t] = 2.0 * std::sqrt(gram) / (lu * lv * lw);
  }
  return kappa;
}

std::vector<double> cumulative_arclength(const PointSequence& poly) {
  if (poly.empty())
    throw std::invalid_argument("cumulative_arclength: empty sequence");
  std::vector<double> s(poly.size());
  s[0] = 0.0;
  for (std::size_t i = 1; i < poly.size(); ++i)
    s[i] = s[i - 1] + (poly[i] - poly[i - 1]).norm();
  return s;
}

void DiagnosticsReport::write_csv(std::ostream& os) const {
  os << "k,mask_gap,dA_residual,quasi_residual,pert_residual,grad_norm\n";
  char buf[64];
  for (const DiagnosticsRecord& r : rows) {
    os << r.level;
    for (double v : {r.mask_gap, r.da_residual, r.quasi_residual,
                     r.pert_residual, r.grad_norm}) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      os << buf;
    }
    os << "\n";
  }
}

DiagnosticsReport run_diagnostics(const PointSequence& f0,
                                  const RefineConfig& cfg) {
  DiagnosticsReport report;
  PointSequence f = f0;
  for (int k = 0; k < cfg.iterations; ++k) {
    if (f.size() < 4)
      throw std::runtime_error("run_diagnostics: open data exhausted at level " +
                               std::to_string(k));
    DiagnosticsRecord rec;
    rec.level = k;
    rec.grad_norm = sup_norm(forward_diff(f));

    const MaskSet masks = masks_for_step(f, k, cfg);
    rec.mask_gap = asymptotic_gap(masks);
    for (const SymbolValue& sv : property_a_residuals(masks, 1, 0))
      rec.da_residual = std::max(rec.da_residual, std::abs(sv.value));

    const PointSequence next = refine_step(f, k, cfg);
    const double scale = std::max(sup_norm(next), 1e-300);
    rec.quasi_residual = sup_distance(masks.apply(f), next) / scale;
    rec.pert_residual = sup_distance(next, uniform_limit_step(f));

    report.rows.push_back(rec);
    f = next;
  }
  return report;
}

Grid aligned_chaikin_grid(const Grid& g, int iterations) {
  if (iterations < 0)
    throw std::invalid_argument("aligned_chaikin_grid: iterations < 0");
  Grid refined = chaikin_limit_grid(g, iterations);
  // Each open-mode step trims one stencil (two refined entries) per end, so
  // after K steps the data aligns with the refined grid minus 2^{K+1} - 2
  // entries at both ends.
  const std::size_t off =
      iterations == 0 ? 0
                      : (static_cast<std::size_t>(1) << (iterations + 1)) - 2;
  if (refined.size() < 2 * off)
    throw std::invalid_argument("aligned_chaikin_grid: grid too short");
  std::vector<double> vals(refined.values().begin() + static_cast<std::ptrdiff_t>(off),
                           refined.values().end() - static_cast<std::ptrdiff_t>(off));
  return Grid(std::move(vals));
}

}  // namespace subdiv
