#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "hardylab/hardy_core.hpp"
#include "hardylab/symbol_products.hpp"

namespace hardylab {

// ---------------------------------------------------------------------------
// Zero location by the argument principle
// ---------------------------------------------------------------------------

struct ZeroCount {
  int zeros = 0;
  double radius = 0.0;        ///< contour radius actually used (after perturbation)
  std::size_t samples = 0;    ///< contour samples actually used (after refinement)
  double min_modulus = 0.0;   ///< min |f| over the samples
  double lipschitz = 0.0;     ///< derivative bound on the contour
  /// True when L * (arc spacing) <= min_modulus / 2, so no sample gap can hide a
  /// phase wrap and the winding number is exact for the stored coefficients.
  bool certified = false;
};

/// Winding number of theta -> f(r e^{i theta}) around 0 from principal-branch phase
/// increments. Samples are doubled (up to 2^20) until the contour is certified. If
/// |f| dips below zero_tol on the contour, the radius is shrunk by r * 1e-3 * k for
/// k = 1, 2, 3 before giving up with OnCircleZero.
ZeroCount count_zeros(const CoefficientFunction& phi, double radius, std::size_t samples = 1024,
                      double zero_tol = 1e-12);

/// Zeros inside the circle of the given radius: power sums from contour moments,
/// Newton identities, companion eigenvalues, then Newton polishing on f itself.
std::vector<cplx> locate_zeros(const CoefficientFunction& phi, double radius, std::size_t samples = 4096);

// ---------------------------------------------------------------------------
// Modulus extrema over the disk
// ---------------------------------------------------------------------------

struct ExtremaOptions {
  std::size_t radii = 32;
  std::size_t angles = 256;
  /// Polynomial symbols are sampled on |z| = 1; truncated series on |z| = 1 - 1e-6.
  bool polynomial = true;
  /// Bound on |f - f_N| over the closed disk for truncated series (0 for polynomials).
  double tail_bound = 0.0;
};

struct ModulusExtrema {
  double sup_lower = 0.0;          ///< attained modulus, a certified lower bound on the sup
  double sup_grid_envelope = 0.0;  ///< upper bound: boundary max + Lipschitz margin + tail
  double inf_upper = 0.0;          ///< attained modulus, an upper bound on the inf
  double inf_grid_envelope = 0.0;  ///< lower bound on the inf (0 when a zero lies inside)
  cplx sup_point = 0.0;
  cplx inf_point = 0.0;
  std::size_t radii = 0;
  std::size_t angles = 0;
  double outer_radius = 1.0;
  int zeros_inside = 0;
  bool near_boundary_zero = false;  ///< a zero with |z| in (1 - 1e-4, 1)
};

ModulusExtrema modulus_extrema(const CoefficientFunction& phi, const ExtremaOptions& opts = {});

enum class CircleRelation { Intersects, InsideDisk, OutsideDisk, Uncertain };

std::string_view to_string(CircleRelation r);

/// Decide phi(D) against the unit circle from computed extrema:
/// InsideDisk if sup envelope < 1 - margin, OutsideDisk if inf envelope > 1 + margin,
/// Intersects if inf_upper < 1 - margin and sup_lower > 1 + margin (the image is
/// connected), else Uncertain.
CircleRelation circle_intersection_test(const ModulusExtrema& e, double margin = 1e-6);
CircleRelation circle_intersection_test(const CoefficientFunction& phi, double margin = 1e-6,
                                        const ExtremaOptions& opts = {});

// ---------------------------------------------------------------------------
// Power-boundedness probe for unimodular lambda
// ---------------------------------------------------------------------------

struct PowerBoundReport {
  std::vector<double> sup_by_n;  ///< grid max of |Phi_n| on the outer circle, n = 1..n_max
  std::vector<double> inf_by_n;  ///< grid min of |Phi_n| over the polar grid
  double sup = 0.0;              ///< max over n of sup_by_n
  double inf = 0.0;              ///< min over n of inf_by_n
  bool bounded = false;          ///< running sup stopped growing over the second half
  bool inverse_bounded = false;  ///< inf over the second half >= inf over the first half > 0
};

PowerBoundReport power_bound_probe(const CoefficientFunction& phi, cplx lambda, std::size_t n_max,
                                   const ExtremaOptions& grid = {8, 64, true, 0.0});

// ---------------------------------------------------------------------------
// Witness searches for irrational rotations
// ---------------------------------------------------------------------------

enum class WitnessKind { PsiToZero, OmegaBoundedBelow, OmegaToInfinity, InvPsiToInfinity };
enum class Conclusion { TendsToZero, BoundedBelow, TendsToInfinity, Inconclusive };

std::string_view to_string(WitnessKind k);
std::string_view to_string(Conclusion c);

struct WitnessThresholds {
  double tol_zero = 1e-40;
  double tol_inf = 1e40;
  std::size_t window = 8;
  double bounded_below_floor = 1e-6;
};

struct WitnessGrid {
  std::size_t radii = 4;
  std::size_t angles = 16;
  double max_radius = 0.95;
  /// When non-empty, these points replace the polar grid.
  std::vector<cplx> points;
};

/// Grid points in scan order: origin first, then rings r = max_radius * i / radii.
std::vector<cplx> grid_points(const WitnessGrid& grid);

/// n_k = k for k <= 512, then ceil(1.2^k), finally n_cap itself.
std::vector<std::size_t> default_schedule(std::size_t n_cap = 100000);

struct WitnessReport {
  WitnessKind kind = WitnessKind::PsiToZero;
  cplx witness_point = 0.0;
  std::size_t witness_index = 0;
  std::vector<std::size_t> subsequence;
  std::vector<double> trajectory;        ///< log |value at n_k| at the witness
  Conclusion conclusion = Conclusion::Inconclusive;
  bool satisfied = false;                ///< the requested behaviour was found somewhere
  double bound_c = 0.0;                  ///< inf_k |value| at the witness (bounded-below reading)
  std::vector<double> running_grid_max;  ///< max over grid of log |value at n_k|
  std::size_t points_scanned = 0;
  std::size_t count_to_zero = 0;
  std::size_t count_bounded_below = 0;
  std::size_t count_to_infinity = 0;
  std::size_t count_inconclusive = 0;
  WitnessThresholds thresholds;
};

/// Classification rule shared by every scanned point.
Conclusion classify_trajectory(const std::vector<double>& log_values, const WitnessThresholds& t);

WitnessReport witness_search(WitnessKind kind, const CoefficientFunction& phi, cplx lambda,
                             const std::vector<std::size_t>& schedule, const WitnessGrid& grid = {},
                             const WitnessThresholds& thresholds = {});

}  // namespace hardylab
