#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hardylab/hardy_core.hpp"

namespace hardylab {

/// Exact rational num/den with den > 0, kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  /// Parses "3", "-0.25", "3/5". Throws std::invalid_argument on anything else.
  static Rational parse(const std::string& text);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

/// A symbol phi together with what is known about it beyond the stored coefficients.
struct SymbolSpec {
  CoefficientFunction coeffs{1.0};
  /// The constant term is known exactly (rational data or a closed form), so
  /// |phi(0)| = 1 may be taken at face value.
  bool exact_constant = false;
  /// No coefficients beyond the stored ones.
  bool polynomial = true;
  /// For truncated series: |c_k| <= tail_k * tail_rho^k for every dropped k.
  double tail_k = 0.0;
  double tail_rho = 0.0;
  std::string label;

  /// Bound on |phi - phi_N| over the closed disk of radius r.
  double tail_bound(double r = 1.0) const;
};

SymbolSpec polynomial_symbol(std::vector<cplx> coeffs, bool exact_constant = false, std::string label = {});

/// psi_p(z) = (p - z)/(1 - p z) + 1 - p, 0 < p < 1: c_0 = 1, c_k = p^{k-1}(p^2 - 1).
/// The order is the smallest one whose tail on the closed disk is below 1e-17,
/// unless `order` is given.
SymbolSpec psi_family(double p, std::size_t order = 0);

/// The two symbols of the lambda = i example: 0.9 + 0.5 z and 0.99 + 0.5 z.
SymbolSpec example_phi0();
SymbolSpec example_phi1();

/// How lambda was supplied. Exact forms make "root of unity or not" a statement
/// about the input rather than about floating point.
struct LambdaSpec {
  enum class Form { Numeric, GaussianRational, RationalRotation, IrrationalAngle };

  Form form = Form::Numeric;
  cplx value = 0.0;
  Rational re;           ///< GaussianRational
  Rational im;           ///< GaussianRational
  std::int64_t p = 0;    ///< RationalRotation: lambda = exp(2 pi i p / q)
  std::int64_t q = 1;
  double turns = 0.0;    ///< IrrationalAngle: lambda = exp(2 pi i turns)
  std::string text;

  static LambdaSpec numeric(cplx value);
  static LambdaSpec gaussian(Rational re, Rational im);
  static LambdaSpec rotation(std::int64_t p, std::int64_t q);
  static LambdaSpec irrational(double turns, std::string label = {});
  /// exp(2 pi i (sqrt(5) - 1) / 2).
  static LambdaSpec golden();
};

}  // namespace hardylab
