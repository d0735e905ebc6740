#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hardylab/hardy_core.hpp"
#include "hardylab/shift_operators.hpp"

namespace hardylab {

struct OrbitTrace {
  std::size_t order = 0;
  std::size_t steps = 0;
  /// log ||T^n x0|| for n = 0..steps, with renormalizations folded back in.
  std::vector<double> log_norms;
  /// distances[t][n]: projective distance from T^n x0 to target t.
  std::vector<std::vector<double>> distances;
  std::vector<double> min_distance;
  std::vector<std::size_t> min_distance_step;
  /// Steps after which the working vector was rescaled to unit norm.
  std::vector<std::size_t> renormalized_at;
  /// First n with T^n x0 = 0 exactly; later norms are -inf and distances 1.
  std::optional<std::size_t> vanished_at;
};

/// min_mu ||mu x - t|| / ||t|| = sqrt(1 - |<x,t>|^2 / (||x||^2 ||t||^2)); 1 when x = 0.
double projective_distance(const VectorXc& x, const VectorXc& t);

/// Iterates x <- T x. The working vector is rescaled whenever its norm leaves
/// [1e-150, 1e150]. Throws std::invalid_argument if x0 or a target is longer than T.
OrbitTrace simulate_orbit(const OperatorMatrix& t, const CoefficientFunction& x0, std::size_t steps,
                          const std::vector<CoefficientFunction>& targets = {});

/// Relative H^2 error between T^n k_{z0} computed with the N x N matrix and the
/// transported kernel conj(Psi_n(z0)) k_{alpha^n z0}.
double kernel_transport_check(cplx lambda, const CoefficientFunction& phi, cplx z0, std::size_t n, std::size_t order);

struct CriterionWitness {
  std::vector<cplx> x0_anchors;
  std::vector<cplx> y0_anchors;
  std::vector<std::size_t> schedule;
};

struct CriterionReport {
  std::vector<std::size_t> schedule;
  /// ||T^{n_k} k_a|| per X0 anchor.
  std::vector<std::vector<double>> x0_norms;
  /// ||S^{n_k} k_a|| per Y0 anchor, S k_a = k_{omega a} / conj(phibar(omega a)).
  std::vector<std::vector<double>> y0_norms;
  /// ||T^{n_k} S^{n_k} k_a - k_a|| per Y0 anchor.
  std::vector<std::vector<double>> ts_residuals;
  std::vector<bool> s_valid;
};

/// Closed-form kernel transport along the schedule; no matrix powers are formed.
/// Y0 anchors need |lambda| = 1. Throws SMapUndefined when some phibar(omega^j a)
/// has modulus <= zero_tol before the end of the schedule.
CriterionReport criterion_check(cplx lambda, const CoefficientFunction& phi, const CriterionWitness& witness,
                                double zero_tol = 1e-14);

struct SupercyclicityReport {
  std::vector<double> min_distance;
  std::vector<std::size_t> min_distance_step;
  /// |(T^n x)_1| / |(T^n x)_0| for n = 0..steps (inf when the constant term vanishes).
  std::vector<double> coefficient_ratio;
  OrbitTrace trace;
};

SupercyclicityReport supercyclicity_probe(const OperatorMatrix& t, const CoefficientFunction& x0, std::size_t steps,
                                          const std::vector<CoefficientFunction>& targets);

struct LimitFunctionalReport {
  cplx normalization = 1.0;    ///< phi(0); the trace uses phi / phi(0)
  std::vector<cplx> trace;     ///< <T^n f, 1> for n = 0..n_max
  cplx limit_estimate = 0.0;   ///< last trace value
  cplx pairing = 0.0;          ///< <f, g>, g = lim of the products of bar(phi/phi(0)) dilated by conj(lambda)
  double pairing_tail = 0.0;   ///< ||f|| times the certified tail bound of g
  std::size_t factors_used = 0;
  bool degenerate = false;     ///< |<f, g>| <= 1e-12 ||f|| ||g||
};

/// Throws std::invalid_argument unless |lambda| < 1 and phi(0) != 0; NotConvergent propagates.
LimitFunctionalReport limit_functional_check(cplx lambda, const CoefficientFunction& phi, const CoefficientFunction& f,
                                             std::size_t n_max, double tol = 1e-13);

/// x0 = sum_k a_k C^{n_k} t_k with C the right inverse of T, n_k = (k + 1) gap and
/// a_k = 1 / max(1, ||C^{n_k} t_k||). Then T^{n_k} x0 is close to a multiple of t_k.
/// Needs phi(0) = 0.
CoefficientFunction criterion_start_vector(cplx lambda, const CoefficientFunction& phi,
                                           const std::vector<CoefficientFunction>& targets, std::size_t gap,
                                           std::size_t order);

/// Gaussian coefficients on the first `degree + 1` slots, unit H^2 norm, padded to `order`.
CoefficientFunction random_function(std::size_t order, std::size_t degree, std::uint64_t seed);

}  // namespace hardylab
