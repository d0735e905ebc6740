#pragma once

#include <cmath>
#include <cstddef>
#include <limits>

#include "hardylab/hardy_core.hpp"

namespace hardylab {

/// Complex number stored as log-modulus plus unit phase, so long products neither
/// overflow nor underflow. Exact zero is log_abs = -inf.
struct LogComplex {
  double log_abs = 0.0;
  cplx phase = 1.0;

  static LogComplex from(cplx z);
  static LogComplex zero() { return {-std::numeric_limits<double>::infinity(), 1.0}; }

  bool is_zero() const noexcept { return std::isinf(log_abs) && log_abs < 0; }
  LogComplex& operator*=(const LogComplex& other);
  LogComplex operator*(const LogComplex& other) const;
  LogComplex operator/(const LogComplex& other) const;
  LogComplex conj() const { return {log_abs, std::conj(phase)}; }
  LogComplex inverse() const;
  /// Converts back; underflows to 0 and overflows to inf components when out of range.
  cplx value() const;
};

enum class ProductKind { Phi, Psi, Omega };

enum class DomainPolicy {
  OpenDisk,   ///< factor arguments must satisfy |w| < 1
  ClosedDisk  ///< |w| <= 1 permitted (polynomial symbols on the boundary)
};

/// Phi_n(z)  = prod_{j=0}^{n-1} phi(lambda^j z)
/// Psi_n(z)  = prod_{j=0}^{n-1} phibar(alpha^j z),  alpha = conj(lambda)
/// Omega_n(z) = prod_{j=1}^{n} phibar(omega^j z),   omega = 1 / conj(lambda)
class ProductSequence {
 public:
  ProductSequence(CoefficientFunction phi, cplx lambda, ProductKind kind);

  const CoefficientFunction& symbol() const noexcept { return phi_; }
  const CoefficientFunction& bar() const noexcept { return phi_bar_; }
  cplx lambda() const noexcept { return lambda_; }
  cplx alpha() const noexcept { return alpha_; }
  cplx omega() const noexcept { return omega_; }
  ProductKind kind() const noexcept { return kind_; }
  bool unimodular() const noexcept { return unimodular_; }

  /// Rotation/dilation factor applied between consecutive factors.
  cplx step() const noexcept;
  /// The j-th factor (j >= 0) evaluated at z; throws DomainEscape if its argument leaves the domain.
  cplx factor(std::size_t j, cplx z, DomainPolicy policy = DomainPolicy::OpenDisk) const;
  /// Argument of the j-th factor.
  cplx factor_argument(std::size_t j, cplx z) const;

 private:
  CoefficientFunction phi_;
  CoefficientFunction phi_bar_;
  cplx lambda_;
  cplx alpha_;
  cplx omega_;
  ProductKind kind_;
  bool unimodular_;
  double angle_ = 0.0;
};

/// n-factor product at z with log-magnitude accumulation.
LogComplex eval_product(const ProductSequence& seq, std::size_t n, cplx z,
                        DomainPolicy policy = DomainPolicy::OpenDisk);

/// Incremental evaluator: advance() multiplies in the next factor. Used for schedules
/// where the same point is tracked through increasing n.
class ProductCursor {
 public:
  ProductCursor(const ProductSequence& seq, cplx z, DomainPolicy policy = DomainPolicy::OpenDisk);
  std::size_t n() const noexcept { return n_; }
  const LogComplex& value() const noexcept { return value_; }
  void advance();
  void advance_to(std::size_t n);

 private:
  const ProductSequence* seq_;
  cplx z_;
  DomainPolicy policy_;
  std::size_t n_ = 0;
  LogComplex value_{};
};

/// Coefficients of Phi_n by iterated truncated multiplication of dilated copies of phi.
CoefficientFunction phi_product_coefficients(const CoefficientFunction& phi, cplx lambda, std::size_t n,
                                             std::size_t order);

struct InfiniteProduct {
  CoefficientFunction h;
  std::size_t n_used = 0;
  double tail_bound = 0.0;  ///< certified bound on ||Phi_m - Phi_{n_used}||_2 for every m > n_used
};

/// Certified bound on sup_{m > n} ||Phi_m - Phi_n||_2 for |lambda| < 1 and phi(0) = 1:
///   ||phi||_2 * prod_{k=1}^{n-1}(1 + eps_k) * (exp(sum_{k>=n} eps_k) - 1),
///   eps_k = C |lambda|^k / sqrt(1 - |lambda|^2),  C = ||phi - 1||_2.
/// Returns +inf when the bound is not representable.
double infinite_product_tail_bound(const CoefficientFunction& phi, double abs_lambda, std::size_t n);

/// Limit h of Phi_n in H^2 for |lambda| < 1 and phi(0) = 1. Returns Phi_n at the first
/// n whose certified tail bound is <= tol. Throws NotConvergent if that needs more than
/// max_factors factors, std::invalid_argument if the preconditions fail.
InfiniteProduct infinite_product_limit(const CoefficientFunction& phi, cplx lambda, std::size_t order,
                                       double tol, std::size_t max_factors = 10000);

}  // namespace hardylab
