#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "hardylab/hardy_core.hpp"
#include "oracles.hpp"

using namespace hardylab;

namespace {

CoefficientFunction from(const oracle::Poly& p) { return CoefficientFunction(std::vector<cplx>(p.begin(), p.end())); }

}  // namespace

TEST(CoefficientFunction, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(CoefficientFunction(std::vector<cplx>{}), std::invalid_argument);
  EXPECT_THROW((CoefficientFunction{1.0, std::numeric_limits<double>::quiet_NaN()}), std::invalid_argument);
  EXPECT_THROW((CoefficientFunction{cplx(0.0, std::numeric_limits<double>::infinity())}), std::invalid_argument);
}

TEST(CoefficientFunction, DegreeAndAccess) {
  const CoefficientFunction f{0.9, 0.5, 0.0, 0.0};
  EXPECT_EQ(f.order(), 4u);
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_EQ(f[7], cplx{});
  EXPECT_EQ(CoefficientFunction::monomial(3).order(), 4u);
  EXPECT_EQ(CoefficientFunction::monomial(3)[3], cplx(1.0));
}

TEST(Evaluate, ConstantTerm) { EXPECT_EQ(evaluate(CoefficientFunction{0.9, 0.5}, 0.0), cplx(0.9)); }

TEST(Evaluate, GeometricSeries) {
  // degree-n partial sum: the gap to 2 is exactly 2^-n
  for (const int n : {10, 40, 52}) {
    const CoefficientFunction f(std::vector<cplx>(static_cast<std::size_t>(n) + 1, 1.0));
    EXPECT_LE(std::abs(evaluate(f, 0.5) - 2.0), std::ldexp(1.0, -n) + 1e-15);
  }
}

TEST(Evaluate, KernelClosedForm) {
  const auto k = ReproducingKernel(0.5).materialize(64);
  EXPECT_NEAR(std::abs(evaluate(k, 0.5) - 4.0 / 3.0), 0.0, 1e-12);
}

TEST(Evaluate, RejectsNonFinitePoint) {
  EXPECT_THROW(evaluate(CoefficientFunction{1.0}, cplx(std::numeric_limits<double>::quiet_NaN(), 0.0)),
               std::invalid_argument);
}

TEST(Evaluate, MatchesExplicitPowers) {
  oracle::Gen g(11);
  for (int t = 0; t < 50; ++t) {
    const auto p = g.poly(g.index(0, 12));
    const cplx z = g.in_disk(1.0);
    EXPECT_NEAR(std::abs(evaluate(from(p), z) - oracle::eval(p, z)), 0.0, 1e-12);
    // derivative by central difference
    const double h = 1e-6;
    const cplx fd = (oracle::eval(p, z + h) - oracle::eval(p, z - h)) / (2.0 * h);
    EXPECT_NEAR(std::abs(evaluate_derivative(from(p), z) - fd), 0.0, 1e-6 * (1.0 + std::abs(fd)));
  }
}

TEST(H2Inner, Examples) {
  EXPECT_EQ(h2_inner(CoefficientFunction{1.0, 0.0}, CoefficientFunction{1.0, 0.0}), cplx(1.0));
  const std::size_t n = 32;
  const auto ka = ReproducingKernel(0.5).materialize(n);
  EXPECT_NEAR(std::abs(h2_inner(ka, ka) - 4.0 / 3.0), 0.0, std::pow(2.0, -2.0 * n) + 1e-15);
  const CoefficientFunction f{cplx(0.3, -2.0), 5.0, 7.0};
  EXPECT_EQ(h2_inner(f, CoefficientFunction{1.0, 0.0}), f.constant_term());
}

TEST(H2Inner, KernelIdentityAndConjugateLinearity) {
  oracle::Gen g(12);
  for (int t = 0; t < 30; ++t) {
    const cplx a = g.in_disk(0.6);
    const cplx b = g.in_disk(0.6);
    const auto ka = ReproducingKernel(a).materialize(96);
    const auto kb = ReproducingKernel(b).materialize(96);
    // sum conj(a)^k b^k
    EXPECT_NEAR(std::abs(h2_inner(ka, kb) - 1.0 / (1.0 - std::conj(a) * b)), 0.0, 1e-12);

    const auto f = from(g.poly(6));
    const auto h = from(g.poly(4));
    const cplx s = g.gaussian();
    EXPECT_NEAR(std::abs(h2_inner(f, h * s) - std::conj(s) * h2_inner(f, h)), 0.0, 1e-12);
    EXPECT_NEAR(h2_norm(f), std::sqrt(h2_inner(f, f).real()), 1e-12);
  }
}

TEST(H2Inner, ReproducesValues) {
  oracle::Gen g(13);
  for (int t = 0; t < 30; ++t) {
    const cplx a = g.in_disk(0.8);
    const auto f = from(g.poly(20));
    const auto ka = ReproducingKernel(a).materialize(64);
    EXPECT_NEAR(std::abs(h2_inner(f, ka) - evaluate(f, a)), 0.0, 1e-12 * (1.0 + h2_norm(f)));
  }
}

TEST(H2Norm, Parseval) {
  oracle::Gen g(14);
  for (int t = 0; t < 10; ++t) {
    const auto f = from(g.poly(g.index(1, 60)));
    const std::size_t m = 4 * f.order() + 8;
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      s += std::norm(evaluate(f, std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m))));
    }
    EXPECT_NEAR(h2_norm(f) * h2_norm(f), s / static_cast<double>(m), 1e-9 * (1.0 + s));
  }
}

TEST(Dilate, Examples) {
  EXPECT_EQ(dilate(CoefficientFunction{1.0, 1.0, 1.0}, 1.0), (CoefficientFunction{1.0, 1.0, 1.0}));
  EXPECT_EQ(dilate(CoefficientFunction{0.0, 1.0}, cplx(0, 1)), (CoefficientFunction{0.0, cplx(0, 1)}));
  const cplx a(0.3, 0.2);
  const cplx lam = std::polar(1.0, 0.7);
  const auto lhs = dilate(ReproducingKernel(a).materialize(32), lam);
  const auto rhs = ReproducingKernel(std::conj(lam) * a).materialize(32);
  for (std::size_t k = 0; k < 32; ++k) EXPECT_NEAR(std::abs(lhs[k] - rhs[k]), 0.0, 1e-14);
}

TEST(Dilate, Composes) {
  oracle::Gen g(15);
  const auto f = from(g.poly(10));
  // exact on coefficients for the quarter turns
  const cplx i(0, 1);
  EXPECT_EQ(dilate(dilate(f, i), i), dilate(f, -1.0));
  const cplx mu = g.in_disk(1.0);
  const cplx nu = g.in_disk(1.0);
  const auto a = dilate(dilate(f, mu), nu);
  const auto b = dilate(f, mu * nu);
  for (std::size_t k = 0; k < f.order(); ++k) EXPECT_NEAR(std::abs(a[k] - b[k]), 0.0, 1e-13);
}

TEST(BarSymbol, Examples) {
  const cplx i(0, 1);
  EXPECT_EQ(bar_symbol(CoefficientFunction{i, 1.0 + i}), (CoefficientFunction{-i, 1.0 - i}));
  oracle::Gen g(16);
  const auto f = from(g.poly(7));
  EXPECT_EQ(bar_symbol(bar_symbol(f)), f);
  const CoefficientFunction phi{0.9, 0.5};
  const cplx z(0.3, 0.1);
  EXPECT_NEAR(std::abs(evaluate(bar_symbol(phi), z) - std::conj(evaluate(phi, std::conj(z)))), 0.0, 1e-15);
}

TEST(Multiply, MatchesSchoolbook) {
  oracle::Gen g(17);
  for (int t = 0; t < 20; ++t) {
    const auto a = g.poly(g.index(0, 9));
    const auto b = g.poly(g.index(0, 9));
    const auto ref = oracle::multiply(a, b);
    const auto got = multiply(from(a), from(b), ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) EXPECT_NEAR(std::abs(got[k] - ref[k]), 0.0, 1e-12);
    EXPECT_EQ(multiply(from(a), from(b), 3).order(), 3u);
  }
}

TEST(Powers, QuarterTurnsExact) {
  const auto p = powers(cplx(0, 1), 9);
  const cplx expect[] = {1.0, {0, 1}, -1.0, {0, -1}, 1.0, {0, 1}, -1.0, {0, -1}, 1.0};
  for (std::size_t k = 0; k < 9; ++k) EXPECT_EQ(p[k], expect[k]);
}

TEST(Powers, UnimodularStaysOnCircle) {
  const auto p = powers(std::polar(1.0, 2.0 * std::numbers::pi * (std::sqrt(5.0) - 1.0) / 2.0), 100000);
  EXPECT_NEAR(std::abs(p.back()), 1.0, 1e-14);
}

TEST(DerivativeBound, DominatesDerivative) {
  oracle::Gen g(18);
  for (int t = 0; t < 20; ++t) {
    const auto f = from(g.poly(8));
    const double r = g.uniform(0.1, 1.0);
    const double bound = derivative_bound(f, r);
    for (int s = 0; s < 20; ++s) EXPECT_LE(std::abs(evaluate_derivative(f, g.in_disk(r))), bound * (1 + 1e-12));
  }
}

TEST(SupModulus, Examples) {
  EXPECT_NEAR(sup_modulus(CoefficientFunction{0.0, 1.0}, 1.0, 16).value, 1.0, 1e-12);
  // a^4 + b^4 closed forms
  EXPECT_NEAR(sup_modulus(CoefficientFunction{0.6561, 0.0, 0.0, 0.0, -0.0625}, 1.0, 64).value, 0.7186, 1e-9);
  EXPECT_NEAR(sup_modulus(CoefficientFunction{0.96059601, 0.0, 0.0, 0.0, -0.0625}, 1.0, 64).value, 1.02309601, 1e-9);
  EXPECT_THROW(sup_modulus(CoefficientFunction{1.0}, 1.5, 64), std::invalid_argument);
  EXPECT_THROW(sup_modulus(CoefficientFunction{1.0}, 1.0, 4), std::invalid_argument);
}

TEST(SupModulus, MonotoneInRadius) {
  oracle::Gen g(19);
  for (int t = 0; t < 20; ++t) {
    const auto f = from(g.poly(6));
    const double a = sup_modulus(f, 0.5, 256).value;
    const double b = sup_modulus(f, 0.9, 256).value;
    const double c = sup_modulus(f, 1.0, 256).value;
    EXPECT_LE(a, b * (1 + 1e-12));
    EXPECT_LE(b, c * (1 + 1e-12));
  }
}

TEST(ReproducingKernel, MaterializeAndNorm) {
  const cplx a(0.3, -0.4);
  const ReproducingKernel k(a);
  const auto m = k.materialize(10);
  for (std::size_t j = 0; j < 10; ++j) EXPECT_NEAR(std::abs(m[j] - std::pow(std::conj(a), static_cast<double>(j))), 0.0, 1e-15);
  EXPECT_NEAR(k.norm(), 1.0 / std::sqrt(1.0 - std::norm(a)), 1e-15);
  EXPECT_NEAR(std::abs(k.value_at(0.2) - 1.0 / (1.0 - std::conj(a) * 0.2)), 0.0, 1e-15);
  EXPECT_THROW(ReproducingKernel(1.0), std::invalid_argument);
}
