#include "hardylab/symbols.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hardylab {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

namespace {

Rational parse_decimal(const std::string& s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool digits = false;
  bool point = false;
  int count = 0;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '.' && !point) {
      point = true;
      continue;
    }
    if (c < '0' || c > '9') throw std::invalid_argument("not a decimal: " + s);
    if (++count > 17) throw std::invalid_argument("too many digits for an exact rational: " + s);
    num = num * 10 + (c - '0');
    if (point) den *= 10;
    digits = true;
  }
  if (!digits) throw std::invalid_argument("not a decimal: " + s);
  return Rational::make(neg ? -num : num, den);
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  const Rational a = parse_decimal(text.substr(0, slash));
  const Rational b = parse_decimal(text.substr(slash + 1));
  if (a.den != 1 || b.den != 1) throw std::invalid_argument("fraction parts must be integers: " + text);
  return make(a.num, b.num);
}

double SymbolSpec::tail_bound(double r) const {
  if (polynomial || tail_k == 0.0) return 0.0;
  const double x = tail_rho * r;
  if (x >= 1.0) return std::numeric_limits<double>::infinity();
  return tail_k * std::pow(x, static_cast<double>(coeffs.order())) / (1.0 - x);
}

SymbolSpec polynomial_symbol(std::vector<cplx> coeffs, bool exact_constant, std::string label) {
  return {CoefficientFunction(std::move(coeffs)), exact_constant, true, 0.0, 0.0, std::move(label)};
}

SymbolSpec psi_family(double p, std::size_t order) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("psi_family: p must lie in (0, 1)");
  SymbolSpec s;
  s.polynomial = false;
  s.exact_constant = true;
  s.tail_k = (1.0 - p * p) / p;
  s.tail_rho = p;
  if (order == 0) {
    order = 2;
    while (order < 8192 && s.tail_k * std::pow(p, static_cast<double>(order)) / (1.0 - p) > 1e-17) ++order;
  }
  std::vector<cplx> c(order);
  c[0] = 1.0;  // p + 1 - p
  double pk = 1.0;
  for (std::size_t k = 1; k < order; ++k) {
    c[k] = pk * (p * p - 1.0);
    pk *= p;
  }
  s.coeffs = CoefficientFunction(std::move(c));
  std::ostringstream os;
  os << "psi:" << p;
  s.label = os.str();
  return s;
}

SymbolSpec example_phi0() { return polynomial_symbol({0.9, 0.5}, true, "phi0"); }
SymbolSpec example_phi1() { return polynomial_symbol({0.99, 0.5}, true, "phi1"); }

LambdaSpec LambdaSpec::numeric(cplx value) {
  LambdaSpec l;
  l.form = Form::Numeric;
  l.value = value;
  std::ostringstream os;
  os.precision(17);
  os << value.real() << (value.imag() < 0 ? "" : "+") << value.imag() << "i";
  l.text = os.str();
  return l;
}

LambdaSpec LambdaSpec::gaussian(Rational re, Rational im) {
  LambdaSpec l;
  l.form = Form::GaussianRational;
  l.re = re;
  l.im = im;
  l.value = {re.value(), im.value()};
  std::ostringstream os;
  os << re.num << "/" << re.den << (im.num < 0 ? "" : "+") << im.num << "/" << im.den << "i";
  l.text = os.str();
  return l;
}

LambdaSpec LambdaSpec::rotation(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw std::invalid_argument("rotation: q must be positive");
  LambdaSpec l;
  l.form = Form::RationalRotation;
  const std::int64_t g = std::gcd(p, q);
  l.p = ((p / g) % (q / g) + q / g) % (q / g);
  l.q = q / g;
  // Quarter turns are exact in floating point.
  switch (4 * l.p % l.q == 0 ? 4 * l.p / l.q : -1) {
    case 0: l.value = {1.0, 0.0}; break;
    case 1: l.value = {0.0, 1.0}; break;
    case 2: l.value = {-1.0, 0.0}; break;
    case 3: l.value = {0.0, -1.0}; break;
    default:
      l.value = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(l.p) / static_cast<double>(l.q));
  }
  l.text = "rot:" + std::to_string(p) + "/" + std::to_string(q);
  return l;
}

LambdaSpec LambdaSpec::irrational(double turns, std::string label) {
  LambdaSpec l;
  l.form = Form::IrrationalAngle;
  l.turns = turns;
  l.value = std::polar(1.0, 2.0 * std::numbers::pi * turns);
  if (label.empty()) {
    std::ostringstream os;
    os.precision(17);
    os << "irr:" << turns;
    label = os.str();
  }
  l.text = std::move(label);
  return l;
}

LambdaSpec LambdaSpec::golden() { return irrational((std::sqrt(5.0) - 1.0) / 2.0, "golden"); }

}  // namespace hardylab
