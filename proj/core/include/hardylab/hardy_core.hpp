#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hardylab {

using cplx = std::complex<double>;

/// Truncated power series f(z) = sum_{k<N} c_k z^k, an element of H^2 of the disk.
///
/// Immutable after construction. The constructor rejects empty or non-finite
/// coefficient lists with std::invalid_argument.
class CoefficientFunction {
 public:
  explicit CoefficientFunction(std::vector<cplx> coeffs);
  CoefficientFunction(std::initializer_list<cplx> coeffs);

  /// Constant function c.
  static CoefficientFunction constant(cplx c, std::size_t order = 1);
  /// The monomial z^k, stored with order max(k + 1, order).
  static CoefficientFunction monomial(std::size_t k, cplx c = 1.0, std::size_t order = 0);

  std::size_t order() const noexcept { return coeffs_.size(); }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  cplx operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }
  cplx constant_term() const noexcept { return coeffs_.front(); }

  /// Index of the last coefficient that is not exactly zero (0 for the zero function).
  std::size_t degree() const noexcept { return degree_; }

  /// Copy zero-padded or cut to the given order.
  CoefficientFunction resized(std::size_t order) const;

  CoefficientFunction operator+(const CoefficientFunction& other) const;
  CoefficientFunction operator-(const CoefficientFunction& other) const;
  CoefficientFunction operator*(cplx s) const;

  bool operator==(const CoefficientFunction& other) const = default;

 private:
  std::vector<cplx> coeffs_;
  std::size_t degree_ = 0;
};

/// Horner evaluation. Throws std::invalid_argument for non-finite z.
cplx evaluate(const CoefficientFunction& f, cplx z);

/// Derivative f'(z), used for Newton polishing and Lipschitz margins.
cplx evaluate_derivative(const CoefficientFunction& f, cplx z);

/// H^2 pairing sum f_k conj(g_k); missing coefficients count as zero.
cplx h2_inner(const CoefficientFunction& f, const CoefficientFunction& g);
double h2_norm(const CoefficientFunction& f);

/// R_mu f: coefficient k becomes c_k mu^k.
CoefficientFunction dilate(const CoefficientFunction& f, cplx mu);

/// The symbol conj(f(conj z)): conjugated coefficients.
CoefficientFunction bar_symbol(const CoefficientFunction& f);

/// Cauchy product truncated to `order` coefficients.
CoefficientFunction multiply(const CoefficientFunction& f, const CoefficientFunction& g, std::size_t order);

/// sum_k k |c_k| r^{k-1}, an upper bound for |f'| on the closed disk of radius r.
double derivative_bound(const CoefficientFunction& f, double radius);

/// Powers mu^0 .. mu^{count-1}. Unimodular mu (within 1e-12) is powered through its
/// angle so that |mu^k| stays exactly 1 for long runs.
std::vector<cplx> powers(cplx mu, std::size_t count);

struct SupModulus {
  double value = 0.0;
  double theta = 0.0;      ///< maximizing angle after refinement
  std::size_t samples = 0; ///< boundary samples used before refinement
};

/// Max of |f(r e^{i theta})| over `samples` equispaced angles, refined by golden-section
/// search around the best sample. By the maximum modulus principle this estimates the sup
/// over the closed disk of that radius; the value is always an attained modulus, hence a
/// lower bound for the true sup.
SupModulus sup_modulus(const CoefficientFunction& f, double radius, std::size_t samples);

/// Szego kernel k_a(z) = 1 / (1 - conj(a) z).
class ReproducingKernel {
 public:
  explicit ReproducingKernel(cplx anchor);

  cplx anchor() const noexcept { return anchor_; }
  /// Coefficients conj(a)^k for k < order.
  CoefficientFunction materialize(std::size_t order) const;
  cplx value_at(cplx z) const { return 1.0 / (1.0 - std::conj(anchor_) * z); }
  /// ||k_a||_2 = (1 - |a|^2)^{-1/2}.
  double norm() const;

 private:
  cplx anchor_;
};

}  // namespace hardylab
