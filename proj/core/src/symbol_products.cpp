#include "hardylab/symbol_products.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hardylab/errors.hpp"

namespace hardylab {

namespace {

constexpr double kUnimodularTol = 1e-12;

cplx unit_phase(cplx z) { return z / std::abs(z); }

}  // namespace

LogComplex LogComplex::from(cplx z) {
  const double a = std::abs(z);
  if (a == 0.0) return zero();
  return {std::log(a), z / a};
}

LogComplex& LogComplex::operator*=(const LogComplex& other) {
  if (is_zero() || other.is_zero()) {
    *this = zero();
    return *this;
  }
  log_abs += other.log_abs;
  phase = unit_phase(phase * other.phase);
  return *this;
}

LogComplex LogComplex::operator*(const LogComplex& other) const {
  LogComplex out = *this;
  out *= other;
  return out;
}

LogComplex LogComplex::inverse() const {
  if (is_zero()) return {std::numeric_limits<double>::infinity(), 1.0};
  return {-log_abs, std::conj(phase)};
}

LogComplex LogComplex::operator/(const LogComplex& other) const { return *this * other.inverse(); }

cplx LogComplex::value() const {
  if (is_zero()) return 0.0;
  return phase * std::exp(log_abs);
}

ProductSequence::ProductSequence(CoefficientFunction phi, cplx lambda, ProductKind kind)
    : phi_(std::move(phi)), phi_bar_(bar_symbol(phi_)), lambda_(lambda), kind_(kind) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
    throw std::invalid_argument("ProductSequence: non-finite lambda");
  }
  unimodular_ = std::abs(std::abs(lambda) - 1.0) <= kUnimodularTol;
  if (unimodular_) {
    // Snap |lambda| to 1: drift (1 + eps)^n would push long Omega products out of the disk.
    angle_ = std::arg(lambda);
    lambda_ = std::polar(1.0, angle_);
    alpha_ = std::conj(lambda_);
    omega_ = lambda_;
  } else {
    alpha_ = std::conj(lambda);
    omega_ = lambda == cplx{} ? cplx(std::numeric_limits<double>::infinity(), 0.0) : 1.0 / std::conj(lambda);
  }
}

cplx ProductSequence::step() const noexcept {
  switch (kind_) {
    case ProductKind::Phi: return lambda_;
    case ProductKind::Psi: return alpha_;
    case ProductKind::Omega: return omega_;
  }
  return lambda_;
}

cplx ProductSequence::factor_argument(std::size_t j, cplx z) const {
  // Omega starts at exponent 1, the others at 0.
  const double e = static_cast<double>(kind_ == ProductKind::Omega ? j + 1 : j);
  if (unimodular_) {
    const double sign = kind_ == ProductKind::Psi ? -1.0 : 1.0;
    return std::polar(1.0, std::remainder(sign * e * angle_, 2.0 * std::numbers::pi)) * z;
  }
  const cplx s = step();
  if (e == 0.0) return z;
  if (s == cplx{}) return 0.0;
  return std::pow(s, e) * z;
}

cplx ProductSequence::factor(std::size_t j, cplx z, DomainPolicy policy) const {
  const cplx w = factor_argument(j, z);
  const double r = std::abs(w);
  const bool inside = policy == DomainPolicy::OpenDisk ? r < 1.0 : r <= 1.0 + 1e-12;
  if (!inside || !std::isfinite(r)) {
    std::ostringstream os;
    os << "factor " << j << " argument has modulus " << r;
    throw DomainEscape(os.str());
  }
  return evaluate(kind_ == ProductKind::Phi ? phi_ : phi_bar_, w);
}

LogComplex eval_product(const ProductSequence& seq, std::size_t n, cplx z, DomainPolicy policy) {
  ProductCursor cur(seq, z, policy);
  cur.advance_to(n);
  return cur.value();
}

ProductCursor::ProductCursor(const ProductSequence& seq, cplx z, DomainPolicy policy)
    : seq_(&seq), z_(z), policy_(policy) {}

void ProductCursor::advance() {
  value_ *= LogComplex::from(seq_->factor(n_, z_, policy_));
  ++n_;
}

void ProductCursor::advance_to(std::size_t n) {
  while (n_ < n) {
    if (value_.is_zero()) {
      // A vanished product stays zero; only domain membership still needs checking.
      n_ = n;
      return;
    }
    advance();
  }
}

CoefficientFunction phi_product_coefficients(const CoefficientFunction& phi, cplx lambda, std::size_t n,
                                             std::size_t order) {
  CoefficientFunction acc = CoefficientFunction::constant(1.0, order);
  const auto pw = powers(lambda, n);
  for (std::size_t j = 0; j < n; ++j) acc = multiply(acc, dilate(phi, pw[j]), order);
  return acc;
}

double infinite_product_tail_bound(const CoefficientFunction& phi, double abs_lambda, std::size_t n) {
  if (!(abs_lambda >= 0.0 && abs_lambda < 1.0)) return std::numeric_limits<double>::infinity();
  const double c = h2_norm(phi - CoefficientFunction::constant(1.0));
  if (c == 0.0 || abs_lambda == 0.0) return 0.0;
  const double denom = std::sqrt(1.0 - abs_lambda * abs_lambda);
  const double log_r = std::log(abs_lambda);

  // log of ||phi||_2 * prod_{k=1}^{n-1} (1 + eps_k)
  double log_head = std::log(h2_norm(phi));
  for (std::size_t k = 1; k < n; ++k) log_head += std::log1p(c * std::exp(log_r * static_cast<double>(k)) / denom);
  // sum_{k>=n} eps_k = C |lambda|^n / ((1 - |lambda|) sqrt(1 - |lambda|^2))
  const double tail_sum = c * std::exp(log_r * static_cast<double>(n)) / ((1.0 - abs_lambda) * denom);
  const double tail = std::expm1(tail_sum);
  if (tail == 0.0) return 0.0;
  const double log_bound = log_head + std::log(tail);
  if (log_bound > 700.0) return std::numeric_limits<double>::infinity();
  return std::exp(log_bound);
}

InfiniteProduct infinite_product_limit(const CoefficientFunction& phi, cplx lambda, std::size_t order, double tol,
                                       std::size_t max_factors) {
  const double r = std::abs(lambda);
  if (!(r < 1.0)) throw std::invalid_argument("infinite_product_limit: requires |lambda| < 1");
  if (std::abs(phi.constant_term() - 1.0) > 1e-12) {
    throw std::invalid_argument("infinite_product_limit: requires phi(0) = 1");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("infinite_product_limit: tol must be positive");

  std::size_t n = 1;
  double bound = infinite_product_tail_bound(phi, r, n);
  while (bound > tol) {
    if (n >= max_factors) {
      std::ostringstream os;
      os << "tail bound " << bound << " still above " << tol << " after " << max_factors
         << " factors (|lambda| = " << r << ")";
      throw NotConvergent(os.str());
    }
    // Doubling search, then bisect back to the first admissible n.
    std::size_t hi = std::min(max_factors, n * 2);
    if (infinite_product_tail_bound(phi, r, hi) > tol) {
      n = hi;
      bound = infinite_product_tail_bound(phi, r, n);
      continue;
    }
    std::size_t lo = n;
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (infinite_product_tail_bound(phi, r, mid) > tol) lo = mid;
      else hi = mid;
    }
    n = hi;
    bound = infinite_product_tail_bound(phi, r, n);
  }
  return {phi_product_coefficients(phi, lambda, n, order), n, bound};
}

}  // namespace hardylab
