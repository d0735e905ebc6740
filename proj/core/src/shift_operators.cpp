#include "hardylab/shift_operators.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hardylab/errors.hpp"

namespace hardylab {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t n) { return static_cast<Index>(n); }

bool is_upper(const MatrixXc& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = j + 1; i < m.rows(); ++i) {
      if (m(i, j) != cplx{}) return false;
    }
  }
  return true;
}

void require_finite(cplx z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::invalid_argument(what);
}

}  // namespace

OperatorMatrix::OperatorMatrix(MatrixXc entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw std::invalid_argument("OperatorMatrix: matrix must be square and non-empty");
  }
  if (!entries_.allFinite()) throw std::invalid_argument("OperatorMatrix: non-finite entry");
  upper_ = is_upper(entries_);
}

OperatorMatrix OperatorMatrix::identity(std::size_t n) { return OperatorMatrix(MatrixXc::Identity(idx(n), idx(n))); }

OperatorMatrix OperatorMatrix::backward_shift(std::size_t n) {
  MatrixXc m = MatrixXc::Zero(idx(n), idx(n));
  for (Index i = 0; i + 1 < idx(n); ++i) m(i, i + 1) = 1.0;
  return OperatorMatrix(std::move(m));
}

OperatorMatrix OperatorMatrix::forward_shift(std::size_t n) {
  MatrixXc m = MatrixXc::Zero(idx(n), idx(n));
  for (Index i = 0; i + 1 < idx(n); ++i) m(i + 1, i) = 1.0;
  return OperatorMatrix(std::move(m));
}

OperatorMatrix OperatorMatrix::dilation(cplx mu, std::size_t n) {
  const auto pw = powers(mu, n);
  MatrixXc m = MatrixXc::Zero(idx(n), idx(n));
  for (std::size_t i = 0; i < n; ++i) m(idx(i), idx(i)) = pw[i];
  return OperatorMatrix(std::move(m));
}

OperatorMatrix OperatorMatrix::adjoint() const { return OperatorMatrix(entries_.adjoint()); }

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& other) const {
  if (order() != other.order()) throw std::invalid_argument("OperatorMatrix: order mismatch");
  return OperatorMatrix(entries_ * other.entries_);
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& other) const {
  if (order() != other.order()) throw std::invalid_argument("OperatorMatrix: order mismatch");
  return OperatorMatrix(entries_ - other.entries_);
}

OperatorMatrix OperatorMatrix::operator*(cplx s) const { return OperatorMatrix(entries_ * s); }

VectorXc OperatorMatrix::apply(const VectorXc& x) const {
  if (x.size() != entries_.cols()) throw std::invalid_argument("OperatorMatrix::apply: dimension mismatch");
  if (upper_) return entries_.triangularView<Eigen::Upper>() * x;
  return entries_ * x;
}

CoefficientFunction OperatorMatrix::apply(const CoefficientFunction& f) const {
  return to_function(apply(to_vector(f, order())));
}

VectorXc to_vector(const CoefficientFunction& f, std::size_t order) {
  VectorXc v = VectorXc::Zero(idx(order));
  for (std::size_t k = 0; k < order && k < f.order(); ++k) v(idx(k)) = f[k];
  return v;
}

CoefficientFunction to_function(const VectorXc& v) {
  return CoefficientFunction(std::vector<cplx>(v.data(), v.data() + v.size()));
}

OperatorMatrix multiplier_of_B(const CoefficientFunction& phi, std::size_t n) {
  MatrixXc m = MatrixXc::Zero(idx(n), idx(n));
  const std::size_t d = std::min(phi.degree(), n - 1);
  for (std::size_t k = 0; k <= d; ++k) {
    const cplx c = phi[k];
    if (c == cplx{}) continue;
    for (std::size_t i = 0; i + k < n; ++i) m(idx(i), idx(i + k)) = c;
  }
  return OperatorMatrix(std::move(m));
}

OperatorMatrix multiplication_operator(const CoefficientFunction& g, std::size_t n) {
  return OperatorMatrix(multiplier_of_B(g, n).entries().transpose());
}

OperatorMatrix build_eigenoperator(cplx lambda, const CoefficientFunction& phi, std::size_t n,
                                   bool allow_outside_disk) {
  require_finite(lambda, "build_eigenoperator: non-finite lambda");
  if (!allow_outside_disk && std::abs(lambda) > 1.0 + 1e-12) {
    throw std::domain_error("build_eigenoperator: no extended eigenoperators exist for |lambda| > 1");
  }
  const auto pw = powers(lambda, n);
  MatrixXc m = multiplier_of_B(phi, n).entries();
  for (std::size_t i = 0; i < n; ++i) m.row(idx(i)) *= pw[i];
  return OperatorMatrix(std::move(m));
}

double intertwining_residual(const OperatorMatrix& x, cplx lambda) {
  const std::size_t n = x.order();
  if (n < 2) return 0.0;
  const MatrixXc& m = x.entries();
  const Index b = idx(n - 1);
  // (B X)(i, j) = X(i + 1, j); (X B)(i, j) = X(i, j - 1).
  MatrixXc r(b, b);
  for (Index j = 0; j < b; ++j) {
    for (Index i = 0; i < b; ++i) {
      const cplx xb = j > 0 ? m(i, j - 1) : cplx{};
      r(i, j) = m(i + 1, j) - lambda * xb;
    }
  }
  return operator_norm_estimate(OperatorMatrix(std::move(r)));
}

std::vector<cplx> superdiagonal_structure(const OperatorMatrix& x, cplx lambda, double tol) {
  if (lambda == cplx{}) throw std::invalid_argument("superdiagonal_structure: lambda must be nonzero");
  const std::size_t n = x.order();
  const MatrixXc& m = x.entries();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double bound = tol * scale;

  const double residual = intertwining_residual(x, lambda);
  if (residual > bound) {
    std::ostringstream os;
    os << "intertwining residual " << residual << " exceeds tolerance " << bound;
    throw StructureViolation(os.str());
  }

  const auto pw = powers(lambda, n);
  std::vector<cplx> coeffs(n);
  for (std::size_t p = 0; p < n; ++p) {
    const cplx c = m(0, idx(p));
    coeffs[p] = c;
    for (std::size_t i = 1; i + p < n; ++i) {
      const double dev = std::abs(m(idx(i), idx(i + p)) - c * pw[i]);
      if (dev > bound) {
        std::ostringstream os;
        os << "superdiagonal " << p << " deviates by " << dev << " at row " << i;
        throw StructureViolation(os.str());
      }
    }
  }
  for (Index j = 0; j < idx(n); ++j) {
    for (Index i = j + 1; i < idx(n); ++i) {
      if (std::abs(m(i, j)) > bound) throw StructureViolation("nonzero entry below the diagonal");
    }
  }
  return coeffs;
}

double operator_norm_estimate(const OperatorMatrix& x) {
  // Largest eigenvalue of the Hermitian Gram matrix X^* X.
  const MatrixXc gram = x.entries().adjoint() * x.entries();
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericFailure("operator_norm_estimate: eigensolver failed");
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

std::size_t leading_index(const CoefficientFunction& phi, double zero_tol) {
  for (std::size_t k = 0; k < phi.order(); ++k) {
    if (std::abs(phi[k]) > zero_tol) return k;
  }
  return phi.order();
}

OperatorMatrix right_inverse_C(cplx lambda, const CoefficientFunction& phi, std::size_t n, double zero_tol) {
  if (lambda == cplx{}) throw std::invalid_argument("right_inverse_C: lambda = 0 is excluded");
  require_finite(lambda, "right_inverse_C: non-finite lambda");
  const std::size_t p = leading_index(phi, zero_tol);
  if (p >= phi.order()) throw SingularSymbol("right_inverse_C: symbol vanishes identically");
  if (p == 0) throw KernelHypothesisFailed("right_inverse_C: phi(0) != 0, so ker(A) does not contain ker(B)");
  if (p >= n) throw std::invalid_argument("right_inverse_C: truncation order too small for z^p factor");

  // A_p = psi(B) with psi_j = c_{p+j}; its inverse is the Toeplitz matrix of the
  // reciprocal power series, obtained by back-substitution.
  const cplx lead = phi[p];
  std::vector<cplx> recip(n);
  recip[0] = 1.0 / lead;
  for (std::size_t k = 1; k < n; ++k) {
    cplx acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += phi[p + j] * recip[k - j];
    recip[k] = -acc / lead;
  }
  const MatrixXc ap_inv = multiplier_of_B(CoefficientFunction(std::move(recip)), n).entries();

  MatrixXc fp = MatrixXc::Zero(idx(n), idx(n));
  for (std::size_t i = 0; i + p < n; ++i) fp(idx(i + p), idx(i)) = 1.0;

  const auto inv_pw = powers(1.0 / lambda, n);
  MatrixXc r = MatrixXc::Zero(idx(n), idx(n));
  for (std::size_t i = 0; i < n; ++i) r(idx(i), idx(i)) = inv_pw[i];

  return OperatorMatrix(ap_inv * fp * r);
}

}  // namespace hardylab
