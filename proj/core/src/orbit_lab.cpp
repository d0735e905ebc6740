#include "hardylab/orbit_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hardylab/errors.hpp"
#include "hardylab/symbol_products.hpp"

namespace hardylab {

namespace {

constexpr double kLow = 1e-150;
constexpr double kHigh = 1e150;

VectorXc padded(const CoefficientFunction& f, std::size_t n, const char* what) {
  if (f.order() > n) throw std::invalid_argument(std::string(what) + " is longer than the operator order");
  return to_vector(f, n);
}

/// x *= 1 / nrm without forming 1 / nrm out of range. Eigen's complex-by-scalar
/// division goes through |nrm|^2, which underflows for nrm below 1e-154.
void rescale(VectorXc& x, double nrm) {
  while (nrm < 1e-150) {
    x *= 1e150;
    nrm *= 1e150;
  }
  while (nrm > 1e150) {
    x *= 1e-150;
    nrm *= 1e-150;
  }
  x *= 1.0 / nrm;
}

double kernel_norm(cplx a) { return 1.0 / std::sqrt(1.0 - std::norm(a)); }

/// Orbit loop shared by simulate_orbit and supercyclicity_probe. `visit` sees the
/// (possibly rescaled) working vector at every n = 0..steps.
template <class Visit>
OrbitTrace run_orbit(const OperatorMatrix& t, const CoefficientFunction& x0, std::size_t steps,
                     const std::vector<CoefficientFunction>& targets, Visit&& visit) {
  const std::size_t n = t.order();
  OrbitTrace tr;
  tr.order = n;
  tr.steps = steps;
  VectorXc x = padded(x0, n, "x0");
  std::vector<VectorXc> tv;
  for (const auto& g : targets) tv.push_back(padded(g, n, "target"));
  tr.distances.assign(tv.size(), {});
  for (auto& d : tr.distances) d.reserve(steps + 1);
  tr.log_norms.reserve(steps + 1);

  double log_scale = 0.0;
  for (std::size_t k = 0; k <= steps; ++k) {
    if (k > 0) x = t.apply(x);
    const double nrm = x.stableNorm();  // plain norm() squares and overflows past 1e154
    if (nrm == 0.0) {
      if (!tr.vanished_at) tr.vanished_at = k;
      tr.log_norms.push_back(-std::numeric_limits<double>::infinity());
    } else {
      if (!std::isfinite(nrm)) throw NumericFailure("orbit norm overflowed between renormalizations");
      tr.log_norms.push_back(std::log(nrm) + log_scale);
    }
    for (std::size_t j = 0; j < tv.size(); ++j) tr.distances[j].push_back(projective_distance(x, tv[j]));
    visit(x);
    if (nrm != 0.0 && (nrm < kLow || nrm > kHigh)) {
      rescale(x, nrm);
      log_scale += std::log(nrm);
      tr.renormalized_at.push_back(k);
    }
    if (tr.vanished_at) {
      // Nothing more can happen; pad the trace.
      for (std::size_t r = k + 1; r <= steps; ++r) {
        tr.log_norms.push_back(-std::numeric_limits<double>::infinity());
        for (auto& d : tr.distances) d.push_back(1.0);
        visit(x);
      }
      break;
    }
  }
  for (const auto& d : tr.distances) {
    const auto it = std::min_element(d.begin(), d.end());
    tr.min_distance.push_back(*it);
    tr.min_distance_step.push_back(static_cast<std::size_t>(it - d.begin()));
  }
  return tr;
}

}  // namespace

double projective_distance(const VectorXc& x, const VectorXc& t) {
  const double nx = x.stableNorm();
  const double nt = t.stableNorm();
  if (nx == 0.0 || nt == 0.0) return 1.0;
  const double c = std::abs(x.dot(t)) / (nx * nt);
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

OrbitTrace simulate_orbit(const OperatorMatrix& t, const CoefficientFunction& x0, std::size_t steps,
                          const std::vector<CoefficientFunction>& targets) {
  return run_orbit(t, x0, steps, targets, [](const VectorXc&) {});
}

double kernel_transport_check(cplx lambda, const CoefficientFunction& phi, cplx z0, std::size_t n, std::size_t order) {
  if (std::abs(z0) >= 1.0) throw std::invalid_argument("kernel_transport_check: |z0| must be < 1");
  const OperatorMatrix t = build_eigenoperator(lambda, phi, order);
  VectorXc x = to_vector(ReproducingKernel(z0).materialize(order), order);
  for (std::size_t k = 0; k < n; ++k) x = t.apply(x);

  const ProductSequence psi(phi, lambda, ProductKind::Psi);
  const cplx coeff = std::conj(eval_product(psi, n, z0).value());
  const cplx moved = psi.factor_argument(n, z0);  // alpha^n z0
  const VectorXc expected = coeff * to_vector(ReproducingKernel(moved).materialize(order), order);

  const double denom = std::max(expected.norm(), x.norm());
  if (denom == 0.0) return 0.0;
  return (x - expected).norm() / denom;
}

CriterionReport criterion_check(cplx lambda, const CoefficientFunction& phi, const CriterionWitness& w,
                                double zero_tol) {
  if (w.schedule.empty() || !std::is_sorted(w.schedule.begin(), w.schedule.end())) {
    throw std::invalid_argument("criterion_check: schedule must be nondecreasing and nonempty");
  }
  if (std::abs(lambda) > 1.0 + 1e-12) throw std::invalid_argument("criterion_check: |lambda| must be <= 1");
  CriterionReport rep;
  rep.schedule = w.schedule;
  const ProductSequence psi(phi, lambda, ProductKind::Psi);

  for (const cplx a : w.x0_anchors) {
    if (std::abs(a) >= 1.0) throw std::invalid_argument("criterion_check: anchors must lie in the disk");
    ProductCursor cur(psi, a);
    std::vector<double> curve;
    for (const std::size_t n : w.schedule) {
      cur.advance_to(n);
      // ||T^n k_a|| = |Psi_n(a)| ||k_{alpha^n a}||
      curve.push_back(std::exp(cur.value().log_abs) * kernel_norm(psi.factor_argument(n, a)));
    }
    rep.x0_norms.push_back(std::move(curve));
  }

  if (w.y0_anchors.empty()) return rep;
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12) {
    throw std::invalid_argument("criterion_check: Y0 anchors need |lambda| = 1");
  }
  const ProductSequence omega(phi, lambda, ProductKind::Omega);
  for (const cplx a : w.y0_anchors) {
    if (std::abs(a) >= 1.0) throw std::invalid_argument("criterion_check: anchors must lie in the disk");
    const double ka = kernel_norm(a);
    LogComplex prod;  // Omega_n(a)
    std::size_t n = 0;
    std::vector<double> s_curve;
    std::vector<double> ts_curve;
    for (const std::size_t target : w.schedule) {
      while (n < target) {
        const cplx f = omega.factor(n, a);
        if (std::abs(f) <= zero_tol) {
          std::ostringstream os;
          os << "phibar(omega^" << n + 1 << " a) vanishes at a = " << a;
          throw SMapUndefined(os.str());
        }
        prod *= LogComplex::from(f);
        ++n;
      }
      const cplx moved = n == 0 ? a : omega.factor_argument(n - 1, a);  // omega^n a
      // ||S^n k_a|| = ||k_{omega^n a}|| / |Omega_n(a)|
      s_curve.push_back(std::exp(-prod.log_abs) * kernel_norm(moved));
      // T^n S^n k_a = conj(Psi_n(omega^n a) / Omega_n(a)) k_a
      const LogComplex ratio = eval_product(psi, n, moved) / prod;
      ts_curve.push_back(ka * std::abs(1.0 - ratio.value()));
    }
    rep.y0_norms.push_back(std::move(s_curve));
    rep.ts_residuals.push_back(std::move(ts_curve));
    rep.s_valid.push_back(true);
  }
  return rep;
}

SupercyclicityReport supercyclicity_probe(const OperatorMatrix& t, const CoefficientFunction& x0, std::size_t steps,
                                          const std::vector<CoefficientFunction>& targets) {
  SupercyclicityReport rep;
  rep.coefficient_ratio.reserve(steps + 1);
  rep.trace = run_orbit(t, x0, steps, targets, [&](const VectorXc& x) {
    const double c0 = std::abs(x(0));
    const double c1 = x.size() > 1 ? std::abs(x(1)) : 0.0;
    rep.coefficient_ratio.push_back(c0 == 0.0 ? std::numeric_limits<double>::infinity() : c1 / c0);
  });
  rep.min_distance = rep.trace.min_distance;
  rep.min_distance_step = rep.trace.min_distance_step;
  return rep;
}

LimitFunctionalReport limit_functional_check(cplx lambda, const CoefficientFunction& phi, const CoefficientFunction& f,
                                             std::size_t n_max, double tol) {
  if (!(std::abs(lambda) < 1.0)) throw std::invalid_argument("limit_functional_check: requires |lambda| < 1");
  const cplx c0 = phi.constant_term();
  if (c0 == cplx{}) throw std::invalid_argument("limit_functional_check: requires phi(0) != 0");
  LimitFunctionalReport rep;
  rep.normalization = c0;
  const CoefficientFunction unit = phi * (1.0 / c0);
  const std::size_t n = std::max<std::size_t>(f.order(), 2);

  const OperatorMatrix t = build_eigenoperator(lambda, unit, n);
  VectorXc x = to_vector(f, n);
  rep.trace.reserve(n_max + 1);
  rep.trace.push_back(x(0));
  for (std::size_t k = 0; k < n_max; ++k) {
    x = t.apply(x);
    rep.trace.push_back(x(0));
  }
  rep.limit_estimate = rep.trace.back();

  // <T^n f, 1> = <f, bar(Phi_n)>, and bar(Phi_n) is the product sequence of bar(phi)
  // dilated by conj(lambda).
  const InfiniteProduct g = infinite_product_limit(bar_symbol(unit), std::conj(lambda), n, tol);
  rep.pairing = h2_inner(f, g.h);
  rep.pairing_tail = h2_norm(f) * g.tail_bound;
  rep.factors_used = g.n_used;
  rep.degenerate = std::abs(rep.pairing) <= 1e-12 * h2_norm(f) * h2_norm(g.h);
  return rep;
}

CoefficientFunction criterion_start_vector(cplx lambda, const CoefficientFunction& phi,
                                           const std::vector<CoefficientFunction>& targets, std::size_t gap,
                                           std::size_t order) {
  if (gap == 0 || targets.empty()) throw std::invalid_argument("criterion_start_vector: need targets and gap >= 1");
  const OperatorMatrix c = right_inverse_C(lambda, phi, order);
  const std::size_t p = leading_index(phi, 1e-14);
  VectorXc x0 = VectorXc::Zero(static_cast<Eigen::Index>(order));
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const std::size_t nk = (k + 1) * gap;
    if (targets[k].degree() + (nk + 1) * p >= order) {
      throw std::invalid_argument("criterion_start_vector: truncation too small for the schedule");
    }
    VectorXc u = padded(targets[k], order, "target");
    double log_norm = std::log(u.norm());
    for (std::size_t i = 0; i < nk; ++i) {
      u = c.apply(u);
      const double s = u.norm();
      rescale(u, s);
      log_norm += std::log(s);
    }
    // a_k C^{n_k} t_k = u * ||C^{n_k} t_k|| / max(1, ||C^{n_k} t_k||)
    x0 += u * std::exp(std::min(log_norm, 0.0));
  }
  return to_function(x0);
}

CoefficientFunction random_function(std::size_t order, std::size_t degree, std::uint64_t seed) {
  if (degree >= order) throw std::invalid_argument("random_function: degree must be < order");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<cplx> c(order);
  double s = 0.0;
  for (std::size_t k = 0; k <= degree; ++k) {
    c[k] = {g(rng), g(rng)};
    s += std::norm(c[k]);
  }
  for (auto& v : c) v /= std::sqrt(s);
  return CoefficientFunction(std::move(c));
}

}  // namespace hardylab
