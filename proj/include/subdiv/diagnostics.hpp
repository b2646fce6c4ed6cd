#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "subdiv/geometry.hpp"
#include "subdiv/nonlinear.hpp"

namespace subdiv {

/// The per-position masks that realize one non-linear step as a linear
/// operator on its own data. Each stencil yields one mask over the support
/// offsets -4..3 (stored at slot = offset + 4): the even offsets carry the
/// first-rule weights, the odd offsets the second-rule weights, and both
/// output points of a stencil share the same mask.
class MaskSet {
 public:
  static constexpr int kSupportMin = -4;
  static constexpr int kSupportLen = 8;
  using Mask = std::array<double, kSupportLen>;

  MaskSet(std::vector<Mask> stencil_masks, int level, Boundary boundary);

  int level() const { return level_; }
  Boundary boundary() const { return boundary_; }
  std::size_t stencil_count() const { return masks_.size(); }
  std::size_t output_count() const { return 2 * masks_.size(); }

  const Mask& stencil_mask(std::size_t s) const { return masks_[s]; }
  /// Mask attached to one output index; consecutive output pairs share it.
  const Mask& output_mask(std::size_t output_index) const {
    return masks_[output_index / 2];
  }

  /// Applies the masks as a linear operator to a sequence of the same length
  /// and boundary mode as the data that generated them.
  PointSequence apply(const PointSequence& g) const;

  /// The mask every stencil converges to: the uniform four-point weights on
  /// both parities.
  static const Mask& uniform_limit_mask();

 private:
  std::vector<Mask> masks_;
  int level_ = 0;
  Boundary boundary_ = Boundary::open;
};

/// Extracts the masks realizing refine_step(f, k, cfg); applying them to f
/// reproduces the refined sequence bit for bit.
MaskSet masks_for_step(const PointSequence& f, int k, const RefineConfig& cfg);

/// Value of a difference symbol (or one of its derivatives) at z = +1 or -1.
struct SymbolValue {
  double value;
  std::size_t output_index;  // i of the symbol d^{i}_m
  int level;
  int order;       // m
  int derivative;  // r
  int sign;        // +1 or -1, the evaluation point
};

/// Evaluates the r-th derivative of the order-m difference symbols
///   d^i_m(z) = sum_{j=0}^m (-1)^j C(m,j) z^j b^{i-j}(z)
/// at z = +1 and z = -1 for every output index i with full support. Masks
/// whose even and odd entries each sum to 1 make all d^i_m(+-1) vanish.
std::vector<SymbolValue> property_a_residuals(const MaskSet& m, int order,
                                              int derivative);

/// Sup over stencils of the max-norm gap between each mask and the
/// uniform-limit mask.
double asymptotic_gap(const MaskSet& m);

/// Sup-norm distance between one non-linear step and the uniform-limit linear
/// step on the same data: max_i |(S_k f)_i - (T f)_i|_2.
double perturbation_residual(const PointSequence& f, int k,
                             const RefineConfig& cfg);

/// The sequence of difference norms max_i |grad f^k_i|_2 for k = 0 ..
/// cfg.iterations; geometric decay is the practical convergence evidence.
std::vector<double> diff_decay(const PointSequence& f0,
                               const RefineConfig& cfg);

/// Per-index Euclidean distances between reference samples and refined data.
std::vector<double> reproduction_error(const PointSequence& reference,
                                       const PointSequence& refined);

/// Discrete curvature at each point with two neighbours: the reciprocal
/// circumradius of the triangle through three consecutive points,
/// kappa = 4 * area / (|a||b||c|). Collinear triples give 0; triples with a
/// repeated point give NaN at that index. Closed sequences wrap and yield one
/// value per point, open ones yield size-2 interior values.
std::vector<double> menger_curvature(const PointSequence& poly);

/// Running sum of consecutive segment lengths, starting at 0. The closing
/// segment of a closed polygon is not included.
std::vector<double> cumulative_arclength(const PointSequence& poly);

/// One diagnostics row per refinement level.
struct DiagnosticsRecord {
  int level = 0;
  double mask_gap = 0.0;        // sup-norm gap to the uniform-limit mask
  double da_residual = 0.0;     // max |d_1(+-1)| over the level's masks
  double quasi_residual = 0.0;  // relative gap masks-applied vs refine_step
  double pert_residual = 0.0;   // |S_k f - T f|_inf
  double grad_norm = 0.0;       // |grad f^k|_inf entering the level
};

struct DiagnosticsReport {
  std::vector<DiagnosticsRecord> rows;
  /// Fixed-header CSV: k,mask_gap,dA_residual,quasi_residual,pert_residual,grad_norm
  void write_csv(std::ostream& os) const;
};

/// Runs the refinement cascade while recording the per-level diagnostics.
DiagnosticsReport run_diagnostics(const PointSequence& f0,
                                  const RefineConfig& cfg);

/// The portion of the depth-`iterations` corner-cut grid that open-boundary
/// refinement of data on `g` stays aligned with (each step drops one refined
/// grid pair at each end). Used to build reference samples for reproduction
/// checks.
Grid aligned_chaikin_grid(const Grid& g, int iterations);

}  // namespace subdiv
