#include "hardylab/hardy_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hardylab {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::size_t last_nonzero(const std::vector<cplx>& c) {
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] != cplx{}) return k;
  }
  return 0;
}

}  // namespace

CoefficientFunction::CoefficientFunction(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("CoefficientFunction: truncation order must be >= 1");
  if (!std::all_of(coeffs_.begin(), coeffs_.end(), finite)) {
    throw std::invalid_argument("CoefficientFunction: non-finite coefficient");
  }
  degree_ = last_nonzero(coeffs_);
}

CoefficientFunction::CoefficientFunction(std::initializer_list<cplx> coeffs)
    : CoefficientFunction(std::vector<cplx>(coeffs)) {}

CoefficientFunction CoefficientFunction::constant(cplx c, std::size_t order) {
  std::vector<cplx> v(std::max<std::size_t>(order, 1));
  v[0] = c;
  return CoefficientFunction(std::move(v));
}

CoefficientFunction CoefficientFunction::monomial(std::size_t k, cplx c, std::size_t order) {
  std::vector<cplx> v(std::max(k + 1, order));
  v[k] = c;
  return CoefficientFunction(std::move(v));
}

CoefficientFunction CoefficientFunction::resized(std::size_t order) const {
  std::vector<cplx> v(coeffs_);
  v.resize(std::max<std::size_t>(order, 1));
  return CoefficientFunction(std::move(v));
}

CoefficientFunction CoefficientFunction::operator+(const CoefficientFunction& other) const {
  std::vector<cplx> v(std::max(order(), other.order()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = (*this)[k] + other[k];
  return CoefficientFunction(std::move(v));
}

CoefficientFunction CoefficientFunction::operator-(const CoefficientFunction& other) const {
  std::vector<cplx> v(std::max(order(), other.order()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = (*this)[k] - other[k];
  return CoefficientFunction(std::move(v));
}

CoefficientFunction CoefficientFunction::operator*(cplx s) const {
  std::vector<cplx> v(coeffs_);
  for (auto& c : v) c *= s;
  return CoefficientFunction(std::move(v));
}

cplx evaluate(const CoefficientFunction& f, cplx z) {
  if (!finite(z)) throw std::invalid_argument("evaluate: non-finite argument");
  const auto c = f.coeffs();
  cplx acc{};
  for (std::size_t k = f.degree() + 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

cplx evaluate_derivative(const CoefficientFunction& f, cplx z) {
  if (!finite(z)) throw std::invalid_argument("evaluate_derivative: non-finite argument");
  const auto c = f.coeffs();
  cplx acc{};
  for (std::size_t k = f.degree() + 1; k-- > 1;) acc = acc * z + static_cast<double>(k) * c[k];
  return acc;
}

cplx h2_inner(const CoefficientFunction& f, const CoefficientFunction& g) {
  const std::size_t n = std::min(f.order(), g.order());
  cplx acc{};
  for (std::size_t k = 0; k < n; ++k) acc += f[k] * std::conj(g[k]);
  return acc;
}

double h2_norm(const CoefficientFunction& f) {
  double acc = 0.0;
  for (const cplx& c : f.coeffs()) acc += std::norm(c);
  return std::sqrt(acc);
}

std::vector<cplx> powers(cplx mu, std::size_t count) {
  std::vector<cplx> p(count);
  if (count == 0) return p;
  const bool axis_unit = (mu.imag() == 0.0 && std::abs(mu.real()) == 1.0) ||
                         (mu.real() == 0.0 && std::abs(mu.imag()) == 1.0);
  if (!axis_unit && std::abs(std::abs(mu) - 1.0) <= 1e-12) {
    const double theta = std::arg(mu);
    for (std::size_t k = 0; k < count; ++k) {
      p[k] = std::polar(1.0, std::remainder(static_cast<double>(k) * theta, 2.0 * std::numbers::pi));
    }
    return p;
  }
  p[0] = 1.0;
  for (std::size_t k = 1; k < count; ++k) p[k] = p[k - 1] * mu;
  return p;
}

CoefficientFunction dilate(const CoefficientFunction& f, cplx mu) {
  const auto pw = powers(mu, f.order());
  std::vector<cplx> v(f.order());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f[k] * pw[k];
  return CoefficientFunction(std::move(v));
}

CoefficientFunction bar_symbol(const CoefficientFunction& f) {
  std::vector<cplx> v(f.order());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::conj(f[k]);
  return CoefficientFunction(std::move(v));
}

CoefficientFunction multiply(const CoefficientFunction& f, const CoefficientFunction& g, std::size_t order) {
  std::vector<cplx> v(std::max<std::size_t>(order, 1));
  const std::size_t df = std::min(f.degree(), v.size() - 1);
  for (std::size_t i = 0; i <= df; ++i) {
    const cplx a = f[i];
    if (a == cplx{}) continue;
    const std::size_t dg = std::min(g.degree(), v.size() - 1 - i);
    for (std::size_t j = 0; j <= dg; ++j) v[i + j] += a * g[j];
  }
  return CoefficientFunction(std::move(v));
}

double derivative_bound(const CoefficientFunction& f, double radius) {
  double acc = 0.0;
  double rk = 1.0;  // r^{k-1}
  for (std::size_t k = 1; k <= f.degree(); ++k) {
    acc += static_cast<double>(k) * std::abs(f[k]) * rk;
    rk *= radius;
  }
  return acc;
}

SupModulus sup_modulus(const CoefficientFunction& f, double radius, std::size_t samples) {
  if (!(radius > 0.0 && radius <= 1.0)) throw std::invalid_argument("sup_modulus: radius must lie in (0, 1]");
  if (samples < 8) throw std::invalid_argument("sup_modulus: need at least 8 samples");

  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  auto modulus = [&](double theta) { return std::abs(evaluate(f, std::polar(radius, theta))); };

  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double v = modulus(step * static_cast<double>(j));
    if (v > best_value) {
      best_value = v;
      best = j;
    }
  }

  // Golden-section refinement on [theta_best - step, theta_best + step].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = step * static_cast<double>(best) - step;
  double b = step * static_cast<double>(best) + step;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = modulus(c);
  double fd = modulus(d);
  for (int it = 0; it < 80 && (b - a) > 1e-13; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = modulus(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = modulus(d);
    }
  }
  SupModulus out{best_value, step * static_cast<double>(best), samples};
  const double mid = 0.5 * (a + b);
  const double fm = modulus(mid);
  if (fm > out.value) {
    out.value = fm;
    out.theta = mid;
  }
  return out;
}

ReproducingKernel::ReproducingKernel(cplx anchor) : anchor_(anchor) {
  if (!finite(anchor) || std::abs(anchor) >= 1.0) {
    throw std::invalid_argument("ReproducingKernel: anchor must lie in the open unit disk");
  }
}

CoefficientFunction ReproducingKernel::materialize(std::size_t order) const {
  std::vector<cplx> v(std::max<std::size_t>(order, 1));
  const cplx ab = std::conj(anchor_);
  cplx p = 1.0;
  for (auto& c : v) {
    c = p;
    p *= ab;
  }
  return CoefficientFunction(std::move(v));
}

double ReproducingKernel::norm() const { return 1.0 / std::sqrt(1.0 - std::norm(anchor_)); }

}  // namespace hardylab
