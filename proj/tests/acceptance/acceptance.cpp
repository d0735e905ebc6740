// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hardylab/classifier.hpp"
#include "hardylab/cli/cli.hpp"
#include "hardylab/disk_geometry.hpp"
#include "hardylab/orbit_lab.hpp"
#include "hardylab/shift_operators.hpp"
#include "hardylab/symbol_products.hpp"
#include "hardylab/symbols.hpp"
#include "oracles.hpp"

using namespace hardylab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: ";
      if (pass) detail << what << "; ";
      pass = false;
    }
  }
};

CoefficientFunction from(const oracle::Poly& p) { return CoefficientFunction(std::vector<cplx>(p.begin(), p.end())); }

const cplx I(0.0, 1.0);

LambdaSpec lam_i() { return LambdaSpec::gaussian(Rational::make(0, 1), Rational::make(1, 1)); }

/// A Proven NotHypercyclic verdict with its certified orbit bound, collected for criterion 10.
struct BoundedCase {
  std::string name;
  cplx lambda;
  CoefficientFunction phi;
  OrbitBound bound;
};
std::vector<BoundedCase> g_bounded;

void record_if_not_hypercyclic(const std::string& name, cplx lambda, const SymbolSpec& phi, const Verdict& v) {
  if (v.grade == Grade::ProvenByTheorem && v.hypercyclic == Tri::No) g_bounded.push_back({name, lambda, phi.coeffs, v.bound});
}

// ---------------------------------------------------------------------------

void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const Verdict v0 = classify_dynamics(lam_i(), example_phi0());
  const Verdict v1 = classify_dynamics(lam_i(), example_phi1());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  o.check(v0.dynamics == Dynamics::NotHypercyclic && v0.grade == Grade::ProvenByTheorem, "phi0 verdict");
  o.check(v1.dynamics == Dynamics::Hypercyclic && v1.grade == Grade::ProvenByTheorem, "phi1 verdict");
  const auto a4b4 = [](double a, double b) { return std::pair{std::pow(a, 4) + std::pow(b, 4), std::pow(a, 4) - std::pow(b, 4)}; };
  const auto [s0, i0] = a4b4(0.9, 0.5);
  const auto [s1, i1] = a4b4(0.99, 0.5);
  o.check(std::abs(v0.extrema->sup_lower - s0) <= 1e-6 && std::abs(v0.extrema->inf_upper - i0) <= 1e-6, "Phi0 extrema");
  o.check(std::abs(v1.extrema->sup_lower - s1) <= 1e-6 && std::abs(v1.extrema->inf_upper - i1) <= 1e-6, "Phi1 extrema");
  o.check(secs < 1.0, "runtime");
  record_if_not_hypercyclic("lambda=i phi0", I, example_phi0(), v0);
  o.detail << std::setprecision(10) << "Phi0 sup " << v0.extrema->sup_lower << " inf " << v0.extrema->inf_upper
           << ", Phi1 sup " << v1.extrema->sup_lower << " inf " << v1.extrema->inf_upper << ", " << std::setprecision(3)
           << secs << " s";
}

void criterion2(Outcome& o) {
  struct Curve {
    std::vector<double> theta, re, im, mod;
  };
  const auto image = [&](const std::string& phi) {
    std::ostringstream out, err;
    const int code = cli::run({"image", "--lambda", "i", "--phi", phi, "--n", "4"}, out, err);
    o.check(code == 0, "image exit code for " + phi);
    Curve c;
    std::istringstream in(out.str());
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (header) {
        o.check(line == "theta,re,im,modulus,unit_re,unit_im", "column names");
        header = false;
        continue;
      }
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream ls(line);
      double t, r, i, m, ur, ui;
      ls >> t >> r >> i >> m >> ur >> ui;
      c.theta.push_back(t);
      c.re.push_back(r);
      c.im.push_back(i);
      c.mod.push_back(m);
    }
    return c;
  };
  const Curve c0 = image("0.9,0.5");
  const Curve c1 = image("0.99,0.5");
  const auto hi = [](const Curve& c) { return *std::max_element(c.mod.begin(), c.mod.end()); };
  const auto lo = [](const Curve& c) { return *std::min_element(c.mod.begin(), c.mod.end()); };
  o.check(std::abs(hi(c0) - 0.7186) <= 1e-6 && std::abs(lo(c0) - 0.5936) <= 1e-6, "Phi0 curve extrema");
  o.check(std::abs(hi(c1) - 1.02309601) <= 1e-6 && std::abs(lo(c1) - 0.89809601) <= 1e-6, "Phi1 curve extrema");
  o.check(hi(c0) < 1.0, "Phi0 curve inside the unit disk");
  int crossings = 0;
  for (std::size_t k = 0; k < c1.mod.size(); ++k) {
    const std::size_t next = (k + 1) % c1.mod.size();
    crossings += (c1.mod[k] - 1.0) * (c1.mod[next] - 1.0) < 0.0;
  }
  o.check(crossings > 0, "Phi1 curve crosses the unit circle");
  // closed: the wrap-around step is no longer than the regular steps
  for (const Curve* c : {&c0, &c1}) {
    double step = 0.0;
    for (std::size_t k = 1; k < c->re.size(); ++k) step = std::max(step, std::hypot(c->re[k] - c->re[k - 1], c->im[k] - c->im[k - 1]));
    const double wrap = std::hypot(c->re.front() - c->re.back(), c->im.front() - c->im.back());
    o.check(wrap <= step * 1.0001 && c->theta.front() == 0.0 && c->theta.back() < 2.0 * std::numbers::pi, "closed curve");
  }
  o.detail << c0.mod.size() << " samples; Phi0 max " << std::setprecision(10) << hi(c0) << "; Phi1 range [" << lo(c1)
           << ", " << hi(c1) << "], " << crossings << " crossings of |Phi|=1";
}

void criterion3(Outcome& o) {
  oracle::Gen g(3003);
  double worst_res = 0.0, worst_rt = 0.0;
  for (int t = 0; t < 100; ++t) {
    cplx lam;
    switch (t % 4) {
      case 0: lam = std::polar(0.3, g.uniform(0.0, 2.0 * std::numbers::pi)); break;
      case 1: lam = std::polar(0.7, g.uniform(0.0, 2.0 * std::numbers::pi)); break;
      case 2: lam = g.unimodular(); break;
      default: lam = I;
    }
    const auto p = g.poly(g.index(0, 8));
    const auto x = build_eigenoperator(lam, from(p), 128);
    worst_res = std::max(worst_res, intertwining_residual(x, lam));
    const auto c = superdiagonal_structure(x, lam, 1e-10);
    for (std::size_t k = 0; k < c.size(); ++k) worst_rt = std::max(worst_rt, std::abs(c[k] - (k < p.size() ? p[k] : 0.0)));
  }
  o.check(worst_res <= 1e-10, "intertwining residual");
  o.check(worst_rt <= 1e-10, "superdiagonal round trip");
  o.detail << "100 cases, max residual " << std::setprecision(3) << worst_res << ", max round-trip error " << worst_rt;
}

void criterion4(Outcome& o) {
  oracle::Gen g(4004);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const cplx lam = g.unimodular();
    const auto p = g.poly(g.index(1, 4));
    const cplx z0 = g.in_disk(0.5);
    const std::size_t n = g.index(1, 16);
    const double e = kernel_transport_check(lam, from(p), z0, n, 128);
    // independent closed form: conj(Psi_n(z0)) k_{alpha^n z0}
    const cplx coeff = std::conj(oracle::psi(p, lam, n, z0));
    const cplx moved = std::pow(std::conj(lam), static_cast<double>(n)) * z0;
    auto x = oracle::kernel(z0, 128);
    const auto m = oracle::eigenoperator(lam, p, 128);
    for (std::size_t k = 0; k < n; ++k) x = oracle::apply(m, x);
    const auto k = oracle::kernel(moved, 128);
    std::vector<cplx> diff(128);
    for (std::size_t j = 0; j < 128; ++j) diff[j] = x[j] - coeff * k[j];
    const double e_oracle = oracle::norm(diff) / std::max(oracle::norm(x), std::abs(coeff) * oracle::norm(k));
    worst = std::max({worst, e, e_oracle});
  }
  o.check(worst <= 1e-8, "transport error");
  o.detail << "50 cases, max relative error " << std::setprecision(3) << worst;
}

void criterion5(Outcome& o) {
  oracle::Gen g(5005);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const cplx lam = g.unimodular();
    const auto phi = from(g.unit_l1_poly(g.index(1, 4)));
    const ProductSequence om(phi, lam, ProductKind::Omega);
    const ProductSequence ps(phi, lam, ProductKind::Psi);
    for (std::size_t i = 1; i <= 20; ++i) {
      for (std::size_t j = 0; j < 20; ++j) {
        const cplx z = std::polar(static_cast<double>(i) / 21.0, 2.0 * std::numbers::pi * static_cast<double>(j) / 20.0);
        ProductCursor a(om, z);
        for (std::size_t n = 1; n <= 64; ++n) {
          a.advance();
          const cplx wn = std::pow(om.omega(), static_cast<double>(n));
          worst = std::max(worst, std::abs(a.value().value() - eval_product(ps, n, wn * z).value()));
        }
      }
    }
  }
  o.check(worst <= 1e-10, "Omega/Psi relation");
  o.detail << "20 rotations x 400 points x n<=64, max error " << std::setprecision(3) << worst;
}

void criterion6(Outcome& o) {
  const CoefficientFunction phi{1.0, 1.0};
  const std::size_t order = 64;
  double worst_ratio = 0.0;
  for (std::size_t n = 4; n <= 40; ++n) {
    const double gap = h2_norm(phi_product_coefficients(phi, 0.5, 2 * n, order) - phi_product_coefficients(phi, 0.5, n, order));
    const double bound = infinite_product_tail_bound(phi, 0.5, n);
    worst_ratio = std::max(worst_ratio, gap / bound);
  }
  o.check(worst_ratio <= 1.0, "Cauchy gap below tail bound");
  const auto h = infinite_product_limit(phi, 0.5, order, 1e-12);
  o.check(std::abs(h.h[0] - 1.0) <= 1e-10, "h(0) = 1");
  const auto euler = oracle::euler_product(0.5, order);
  double err = 0.0;
  for (std::size_t k = 0; k < order; ++k) err += std::norm(h.h[k] - euler[k]);
  o.check(std::sqrt(err) <= 1e-10, "limit matches the Euler series");
  o.detail << "max gap/bound " << std::setprecision(3) << worst_ratio << " over 4<=n<=40; h from " << h.n_used
           << " factors, ||h - euler||_2 " << std::sqrt(err);
}

void criterion7(Outcome& o) {
  oracle::Gen g(7007);
  int agree = 0;
  double worst_env = 0.0, worst_pair = 0.0, worst_decay = 0.0;
  for (int t = 0; t < 20; ++t) {
    const bool vanishing = t % 2 == 0;
    const cplx lam = std::polar(g.uniform(0.2, 0.8), g.uniform(0.0, 2.0 * std::numbers::pi));
    auto p = g.unit_l1_poly(g.index(1, 3));
    if (vanishing) p[0] = 0.0;
    else p[0] += p[0] / std::abs(p[0]);  // |phi(0)| well away from 0
    const auto spec = polynomial_symbol(std::vector<cplx>(p.begin(), p.end()));
    const auto v = classify_dynamics(LambdaSpec::numeric(lam), spec);
    const bool super = v.supercyclic == Tri::Yes && v.supercyclic_grade == Grade::ProvenByTheorem &&
                       v.dynamics == Dynamics::SupercyclicNotHypercyclic;
    const bool not_super = v.supercyclic == Tri::No && v.supercyclic_grade == Grade::ProvenByTheorem &&
                           v.dynamics == Dynamics::NotSupercyclic;
    agree += vanishing ? super : not_super;
    record_if_not_hypercyclic("inside-disk case " + std::to_string(t), lam, spec, v);
    if (vanishing) continue;

    // ratio |(T^n f)_1| / |(T^n f)_0| against |lambda|^n ||f|| exp(C1/(1-|lambda|)) / |(T'^n f)_0|,
    // T' the operator of phi / phi(0)
    const auto f = random_function(64, 63, 100 + static_cast<std::uint64_t>(t));
    const auto unit = from(p) * (1.0 / p[0]);
    const auto probe = supercyclicity_probe(build_eigenoperator(lam, unit, 64), f, 200, {});
    const auto lf = limit_functional_check(lam, from(p), f, 200);
    double c1 = 0.0;
    for (std::size_t k = 1; k < p.size(); ++k) c1 += std::abs(p[k]) / std::abs(p[0]);
    const double r = std::abs(lam);
    for (std::size_t n = 0; n <= 200; ++n) {
      const double env = std::pow(r, static_cast<double>(n)) * h2_norm(f) * std::exp(c1 / (1.0 - r)) / std::abs(lf.trace[n]);
      worst_env = std::max(worst_env, probe.coefficient_ratio[n] / env);
    }
    worst_decay = std::max(worst_decay, probe.coefficient_ratio[200]);
    worst_pair = std::max(worst_pair, std::abs(lf.trace[200] - lf.pairing));
  }
  o.check(agree == 20, "verdict dichotomy");
  o.check(worst_env <= 1.0, "ratio envelope");
  o.check(worst_decay <= 1e-12, "ratio tends to zero");
  o.check(worst_pair <= 1e-8, "limit functional pairing");
  o.detail << agree << "/20 verdicts; max ratio/envelope " << std::setprecision(3) << worst_env << ", max ratio at n=200 "
           << worst_decay << ", max |<T^n f,1> - <f,g>| " << worst_pair;
}

void criterion8(Outcome& o) {
  oracle::Gen g(8008);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const double r = std::array{0.3, 0.6, 0.9}[static_cast<std::size_t>(t % 3)];
    const cplx lam = std::polar(r, g.uniform(0.0, 2.0 * std::numbers::pi));
    // truncation of an H^2 function with slowly decaying coefficients
    std::vector<cplx> c(256);
    const double decay = g.uniform(0.5, 1.5);
    for (std::size_t k = 0; k < 256; ++k) c[k] = g.gaussian() / std::pow(1.0 + static_cast<double>(k), decay);
    const CoefficientFunction phi(c);
    const double est = operator_norm_estimate(build_eigenoperator(lam, phi, 256));
    worst = std::max(worst, est / (std::sqrt((1.0 + r) / (1.0 - r)) * h2_norm(phi)));
  }
  o.check(worst <= 1.0, "norm bound");
  o.detail << "50 cases, max estimate/bound " << std::setprecision(4) << worst;
}

void criterion9(Outcome& o) {
  double worst = 0.0;
  int alt_formula_zeros = 0;
  for (int k = 1; k <= 9; ++k) {
    const double p = 0.1 * k;
    const auto spec = psi_family(p);
    const auto zc = count_zeros(spec.coeffs, 0.99, 2048);
    o.check(zc.zeros == 1 && zc.certified, "one certified zero for p=" + std::to_string(p));
    const auto roots = locate_zeros(spec.coeffs, 0.99);
    // brute-force oracle: solve p - z = (p - 1)(1 - p z) directly
    const double root = oracle::psi_p_root(p);
    o.check(std::abs(oracle::psi_p(p, root)) <= 1e-14, "oracle root");
    if (roots.size() == 1) worst = std::max(worst, std::abs(roots[0] - root));
    else o.check(false, "located root count");
    const double alt = (2 * p - 1) / (p * p - p + 1);
    alt_formula_zeros += std::abs(oracle::psi_p(p, alt)) <= 1e-9;
  }
  o.check(worst <= 1e-10, "zero location");
  int hyper = 0;
  for (int k = 1; k <= 9; ++k) {
    for (const auto& lam : {LambdaSpec::gaussian(Rational::make(3, 5), Rational::make(4, 5)),
                            LambdaSpec::gaussian(Rational::make(-5, 13), Rational::make(12, 13))}) {
      const auto v = classify_dynamics(lam, psi_family(0.1 * k));
      const bool ok = v.rotation.kind == RotationKind::IrrationalRotation && v.rotation.exact &&
                      v.dynamics == Dynamics::Hypercyclic && v.grade == Grade::ProvenByTheorem;
      hyper += ok;
      record_if_not_hypercyclic("psi family", v.rotation.lambda, psi_family(0.1 * k), v);
    }
  }
  o.check(hyper == 18, "Hypercyclic/Proven for exact irrational rotations");
  o.detail << "max root error " << std::setprecision(3) << worst << "; " << hyper
           << "/18 Proven verdicts; alternative closed form (2p-1)/(p^2-p+1) is a zero for " << alt_formula_zeros
           << "/9 values of p, 1/(1+p-p^2) for 9/9";
}

void criterion10(Outcome& o) {
  const std::size_t n = 256;
  const std::size_t steps = 10000;
  double worst = -1e300;  // max over cases of (log ||T^n x0|| - log bound - log ||x0||)
  for (const auto& c : g_bounded) {
    const auto t = build_eigenoperator(c.lambda, c.phi, n);
    for (const auto& x0 : {CoefficientFunction::monomial(0, 1.0, n), random_function(n, n - 1, 10)}) {
      const auto tr = simulate_orbit(t, x0, steps);
      const double base = std::log(h2_norm(x0));
      for (std::size_t k = 0; k <= steps; ++k) worst = std::max(worst, tr.log_norms[k] - base - c.bound.log_bound(k));
    }
  }
  o.check(!g_bounded.empty(), "some Proven NotHypercyclic verdicts");
  o.check(worst <= 1e-9, "orbit norms below the certified bound");

  // Rolewicz 2B: proven hypercyclic, and a criterion-built orbit approaches each target
  const CoefficientFunction rolewicz{0.0, 2.0};
  const auto v = classify_dynamics(LambdaSpec::gaussian(Rational::make(1, 1), Rational::make(0, 1)),
                                   polynomial_symbol({0.0, 2.0}, true));
  o.check(v.dynamics == Dynamics::Hypercyclic && v.grade == Grade::ProvenByTheorem, "Rolewicz verdict");
  std::vector<CoefficientFunction> targets;
  for (std::uint64_t s = 0; s < 4; ++s) targets.push_back(random_function(n, 4, 900 + s));
  const auto x0 = criterion_start_vector(1.0, rolewicz, targets, 40, n);
  const auto tr = simulate_orbit(build_eigenoperator(1.0, rolewicz, n), x0, steps, targets);
  double dip = 0.0;
  for (const double d : tr.min_distance) dip = std::max(dip, d);
  o.check(dip < 0.5, "Rolewicz projective dips");
  o.detail << g_bounded.size() << " bounded cases x 2 starts x " << steps << " steps, max log excess " << std::setprecision(3)
           << worst << "; Rolewicz worst min distance over " << targets.size() << " targets " << dip;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"worked example lambda = i", criterion1},
      {"image curves", criterion2},
      {"factorization and intertwining", criterion3},
      {"kernel transport", criterion4},
      {"Omega/Psi relation", criterion5},
      {"infinite product", criterion6},
      {"supercyclicity dichotomy", criterion7},
      {"norm bound", criterion8},
      {"psi_p family", criterion9},
      {"evidence coherence", criterion10}};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::cout << "criterion " << std::setw(2) << k + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[k].first
              << "  [" << o.detail.str() << "] (" << std::fixed << std::setprecision(2) << secs << " s)"
              << std::defaultfloat << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
