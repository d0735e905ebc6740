#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "hardylab/hardy_core.hpp"

namespace hardylab {

using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

/// N x N complex matrix acting on coefficient columns: entry (i, j) multiplies
/// coefficient j and contributes to coefficient i.
class OperatorMatrix {
 public:
  explicit OperatorMatrix(MatrixXc entries);

  static OperatorMatrix identity(std::size_t n);
  static OperatorMatrix backward_shift(std::size_t n);
  static OperatorMatrix forward_shift(std::size_t n);
  /// R_mu = diag(mu^i).
  static OperatorMatrix dilation(cplx mu, std::size_t n);

  std::size_t order() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  const MatrixXc& entries() const noexcept { return entries_; }
  cplx operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  bool upper_triangular() const noexcept { return upper_; }

  OperatorMatrix adjoint() const;
  OperatorMatrix operator*(const OperatorMatrix& other) const;
  OperatorMatrix operator-(const OperatorMatrix& other) const;
  OperatorMatrix operator*(cplx s) const;

  VectorXc apply(const VectorXc& x) const;
  CoefficientFunction apply(const CoefficientFunction& f) const;

 private:
  MatrixXc entries_;
  bool upper_ = false;
};

VectorXc to_vector(const CoefficientFunction& f, std::size_t order);
CoefficientFunction to_function(const VectorXc& v);

/// phi(B) = sum c_k B^k: upper-triangular Toeplitz, entry (i, j) = c_{j-i} for j >= i.
OperatorMatrix multiplier_of_B(const CoefficientFunction& phi, std::size_t n);

/// Analytic Toeplitz operator M_g: lower-triangular, entry (i, j) = g_{i-j}.
OperatorMatrix multiplication_operator(const CoefficientFunction& g, std::size_t n);

/// X = R_lambda phi(B), entry (i, j) = lambda^i c_{j-i}.
///
/// Extended eigenoperators only exist for |lambda| <= 1; pass
/// allow_outside_disk = true to build the matrix anyway for experiments.
OperatorMatrix build_eigenoperator(cplx lambda, const CoefficientFunction& phi, std::size_t n,
                                   bool allow_outside_disk = false);

/// Largest singular value of (B X - lambda X B) on the leading (N-1) x (N-1) block.
double intertwining_residual(const OperatorMatrix& x, cplx lambda);

/// Recover symbol coefficients c_p = X(0, p) and verify X(n, n + p) = c_p lambda^n
/// (and vanishing below the diagonal) within `tol`, scaled by max(1, max |X_ij|).
/// Throws StructureViolation on failure.
std::vector<cplx> superdiagonal_structure(const OperatorMatrix& x, cplx lambda, double tol);

/// Largest singular value of the truncation; a lower bound for the operator norm of the
/// infinite matrix whenever the truncation is a compression (upper-triangular case).
double operator_norm_estimate(const OperatorMatrix& x);

/// Right inverse C = A_p^{-1} F^p R_{1/lambda} of A = R_lambda phi(B) where
/// phi = z^p psi, psi(0) != 0, p >= 1. A C = I on the leading (N - p) block.
///
/// Throws KernelHypothesisFailed when p = 0, SingularSymbol when phi vanishes at
/// `zero_tol`, std::invalid_argument for lambda = 0.
OperatorMatrix right_inverse_C(cplx lambda, const CoefficientFunction& phi, std::size_t n,
                               double zero_tol = 1e-14);

/// Index of the first coefficient with modulus above zero_tol; order() if none.
std::size_t leading_index(const CoefficientFunction& phi, double zero_tol);

}  // namespace hardylab
