#include "hardylab/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hardylab/errors.hpp"
#include "hardylab/symbol_products.hpp"

namespace hardylab {

std::string_view to_string(RotationKind k) {
  switch (k) {
    case RotationKind::Zero: return "Zero";
    case RotationKind::InsideDisk: return "InsideDisk";
    case RotationKind::RootOfUnity: return "RootOfUnity";
    case RotationKind::IrrationalRotation: return "IrrationalRotation";
    case RotationKind::OutsideDisk: return "OutsideDisk";
  }
  return "Zero";
}

std::string_view to_string(Dynamics d) {
  switch (d) {
    case Dynamics::Hypercyclic: return "Hypercyclic";
    case Dynamics::NotHypercyclic: return "NotHypercyclic";
    case Dynamics::SupercyclicNotHypercyclic: return "SupercyclicNotHypercyclic";
    case Dynamics::Supercyclic: return "Supercyclic";
    case Dynamics::NotSupercyclic: return "NotSupercyclic";
    case Dynamics::NoEigenoperatorExists: return "NoEigenoperatorExists";
    case Dynamics::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

std::string_view to_string(Grade g) {
  switch (g) {
    case Grade::ProvenByTheorem: return "ProvenByTheorem";
    case Grade::NumericalEvidence: return "NumericalEvidence";
    case Grade::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

double OrbitBound::log_bound(std::size_t n) const {
  if (kind == Kind::PowerBounded) return std::log(constant);
  return std::log(constant) + static_cast<double>(n) * std::log(rate);
}

void ClassifierConfig::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (truncation < 2) throw ConfigError("truncation must be at least 2");
  if (q_max < 1) throw ConfigError("q_max must be at least 1");
  if (!positive(rotation_tol) || rotation_tol >= 0.5) throw ConfigError("rotation_tol must lie in (0, 0.5)");
  if (!positive(zero_tol)) throw ConfigError("zero_tol must be positive");
  if (!positive(margin) || margin >= 1.0) throw ConfigError("margin must lie in (0, 1)");
  if (grid_radii < 16 || grid_angles < 64) throw ConfigError("extrema grid must be at least 16 x 64");
  if (!positive(thresholds.tol_zero) || thresholds.tol_zero >= 1.0) throw ConfigError("tol_zero must lie in (0, 1)");
  if (!std::isfinite(thresholds.tol_inf) || thresholds.tol_inf <= 1.0) throw ConfigError("tol_inf must exceed 1");
  if (thresholds.window < 1) throw ConfigError("window must be at least 1");
  if (!positive(thresholds.bounded_below_floor)) throw ConfigError("bounded_below_floor must be positive");
  if (thresholds.tol_zero >= thresholds.bounded_below_floor) throw ConfigError("tol_zero must be below bounded_below_floor");
  if (schedule.empty() || schedule.front() == 0 ||
      std::adjacent_find(schedule.begin(), schedule.end(), std::greater_equal<>()) != schedule.end()) {
    throw ConfigError("schedule must be strictly increasing positive integers");
  }
  if (power_probe_n < 2) throw ConfigError("power_probe_n must be at least 2");
  if (!(zero_radius >= 0.0 && zero_radius < 1.0)) throw ConfigError("zero_radius must lie in [0, 1)");
  if (witness_grid.points.empty() && (witness_grid.radii == 0 || witness_grid.angles == 0)) {
    throw ConfigError("witness grid is empty");
  }
  if (!(witness_grid.max_radius > 0.0 && witness_grid.max_radius < 1.0)) {
    throw ConfigError("witness grid radius must lie in (0, 1)");
  }
}

// ---------------------------------------------------------------------------
// Rotation classes
// ---------------------------------------------------------------------------

RotationClass classify_rotation(cplx lambda, std::size_t q_max, double tol) {
  if (q_max < 1) throw std::invalid_argument("classify_rotation: q_max must be >= 1");
  RotationClass rc;
  rc.lambda = lambda;
  rc.tolerance = tol;
  const double m = std::abs(lambda);
  if (lambda == cplx{}) {
    rc.kind = RotationKind::Zero;
    rc.exact = true;
    return rc;
  }
  if (m < 1.0 - tol) {
    rc.kind = RotationKind::InsideDisk;
    return rc;
  }
  if (m > 1.0 + tol) {
    rc.kind = RotationKind::OutsideDisk;
    return rc;
  }
  const double theta = std::arg(lambda) / (2.0 * std::numbers::pi);
  rc.angle_turns = theta < 0 ? theta + 1.0 : theta;
  for (std::size_t q = 1; q <= q_max; ++q) {
    const double t = static_cast<double>(q) * theta;
    if (std::abs(std::polar(1.0, 2.0 * std::numbers::pi * (t - std::round(t))) - 1.0) <= tol) {
      rc.kind = RotationKind::RootOfUnity;
      rc.order = q;
      const auto qq = static_cast<std::int64_t>(q);
      rc.rotation = std::make_pair(((static_cast<std::int64_t>(std::llround(t)) % qq) + qq) % qq, qq);
      return rc;
    }
  }
  rc.kind = RotationKind::IrrationalRotation;
  return rc;
}

RotationClass classify_rotation(const LambdaSpec& spec, std::size_t q_max, double tol) {
  if (q_max < 1) throw std::invalid_argument("classify_rotation: q_max must be >= 1");
  RotationClass rc;
  rc.lambda = spec.value;
  rc.tolerance = tol;
  switch (spec.form) {
    case LambdaSpec::Form::Numeric:
      return classify_rotation(spec.value, q_max, tol);

    case LambdaSpec::Form::RationalRotation:
      rc.kind = RotationKind::RootOfUnity;
      rc.order = static_cast<std::size_t>(spec.q);
      rc.exact = true;
      rc.rotation = std::make_pair(spec.p, spec.q);
      rc.angle_turns = static_cast<double>(spec.p) / static_cast<double>(spec.q);
      return rc;

    case LambdaSpec::Form::IrrationalAngle:
      rc.kind = RotationKind::IrrationalRotation;
      rc.exact = true;
      rc.angle_turns = spec.turns - std::floor(spec.turns);
      return rc;

    case LambdaSpec::Form::GaussianRational: {
      const auto fits = [](std::int64_t v) { return v > -(std::int64_t{1} << 31) && v < (std::int64_t{1} << 31); };
      if (!fits(spec.re.num) || !fits(spec.re.den) || !fits(spec.im.num) || !fits(spec.im.den)) {
        return classify_rotation(spec.value, q_max, tol);
      }
      rc.exact = true;
      if (spec.re.num == 0 && spec.im.num == 0) {
        rc.kind = RotationKind::Zero;
        return rc;
      }
      __extension__ typedef __int128 i128;
      const i128 a = spec.re.num, b = spec.re.den, c = spec.im.num, d = spec.im.den;
      const i128 lhs = a * a * d * d + c * c * b * b;
      const i128 rhs = b * b * d * d;
      if (lhs < rhs) {
        rc.kind = RotationKind::InsideDisk;
        return rc;
      }
      if (lhs > rhs) {
        rc.kind = RotationKind::OutsideDisk;
        return rc;
      }
      const double theta = std::arg(spec.value) / (2.0 * std::numbers::pi);
      rc.angle_turns = theta < 0 ? theta + 1.0 : theta;
      if (spec.re.num == 0 || spec.im.num == 0) {
        // +-1 or +-i
        rc.kind = RotationKind::RootOfUnity;
        const std::int64_t quarter = spec.im.num == 0 ? (spec.re.num > 0 ? 0 : 2) : (spec.im.num > 0 ? 1 : 3);
        const auto red = LambdaSpec::rotation(quarter, 4);
        rc.order = static_cast<std::size_t>(red.q);
        rc.rotation = std::make_pair(red.p, red.q);
        rc.lambda = red.value;
        return rc;
      }
      rc.kind = RotationKind::IrrationalRotation;
      return rc;
    }
  }
  return rc;
}

// ---------------------------------------------------------------------------
// The ladder
// ---------------------------------------------------------------------------

namespace {

double ell1(const SymbolSpec& s) {
  double t = 0.0;
  for (const cplx& c : s.coeffs.coeffs()) t += std::abs(c);
  return t + s.tail_bound(1.0);
}

std::size_t angles_for(std::size_t degree, std::size_t base) {
  return std::clamp<std::size_t>(64 * degree, base, std::size_t{1} << 16);
}

/// Phi_r with every coefficient kept, plus a tail bound on the closed disk.
struct ProductSymbol {
  CoefficientFunction f;
  double tail = 0.0;
};

std::size_t symbol_degree(const SymbolSpec& phi) {
  return phi.polynomial ? phi.coeffs.degree() : phi.coeffs.order() - 1;
}

ProductSymbol product_symbol(const SymbolSpec& phi, cplx lambda, std::size_t r) {
  const std::size_t deg = symbol_degree(phi);
  ProductSymbol out{phi_product_coefficients(phi.coeffs, lambda, r, r * deg + 1), 0.0};
  if (!phi.polynomial) {
    double g = 0.0;
    for (const cplx& c : phi.coeffs.coeffs()) g += std::abs(c);
    const double t = phi.tail_bound(1.0);
    out.tail = std::pow(g + t, static_cast<double>(r)) - std::pow(g, static_cast<double>(r));
  }
  return out;
}

ModulusExtrema product_extrema(const SymbolSpec& phi, cplx lambda, std::size_t r, const ClassifierConfig& cfg) {
  const ProductSymbol ps = product_symbol(phi, lambda, r);
  const std::size_t radii = ps.f.order() > 512 ? 16 : cfg.grid_radii;
  return modulus_extrema(ps.f, {radii, angles_for(ps.f.order(), cfg.grid_angles), phi.polynomial, ps.tail});
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

struct ZeroCertificate {
  bool certified = false;
  std::optional<ZeroCount> count;
  std::string text;
};

ZeroCertificate certify_zero(const SymbolSpec& phi, const ClassifierConfig& cfg) {
  ZeroCertificate zc;
  const double r = cfg.zero_radius > 0.0 ? cfg.zero_radius : (phi.polynomial ? 1.0 - 1e-6 : 0.999);
  try {
    const ZeroCount c = count_zeros(phi.coeffs, r, 1024, cfg.zero_tol);
    zc.count = c;
    const double arc = 2.0 * std::numbers::pi * c.radius / static_cast<double>(c.samples);
    const double contour_floor = c.min_modulus - c.lipschitz * arc / 2.0;
    // Rouche: the dropped tail cannot move zeros across the contour.
    const bool rouche = phi.polynomial || contour_floor > phi.tail_bound(c.radius);
    zc.certified = c.certified && rouche && c.zeros >= 1;
    zc.text = std::to_string(c.zeros) + " zero(s) in |z| < " + fmt(c.radius) + (c.certified ? " (certified)" : "");
  } catch (const OnCircleZero& e) {
    zc.text = e.what();
  }
  return zc;
}

OrbitBound default_bound(const SymbolSpec& phi) {
  return {OrbitBound::Kind::Geometric, 1.0, ell1(phi), "||Phi_n||_inf <= ||phi||_1^n"};
}

/// From sup envelopes S_0 = 1, S_1, ..., S_q: ||Phi_{mq + r}|| <= S_q^m S_r.
OrbitBound periodic_bound(const std::vector<double>& s, std::size_t q) {
  const double sq = s[q];
  if (sq <= 1.0) {
    const double m = *std::max_element(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(q));
    return {OrbitBound::Kind::PowerBounded, m, 1.0, "max_{r<q} ||Phi_r||_inf with ||Phi_q||_inf <= 1"};
  }
  const double rate = std::pow(sq, 1.0 / static_cast<double>(q));
  double k = 1.0;
  for (std::size_t r = 0; r < q; ++r) k = std::max(k, s[r] / std::pow(rate, static_cast<double>(r)));
  return {OrbitBound::Kind::Geometric, k, rate, "||Phi_q||_inf^{n/q} times max_{r<q} ||Phi_r||_inf"};
}

void mark_hypercyclic(Verdict& v, Grade g) {
  v.hypercyclic = Tri::Yes;
  if (g == Grade::ProvenByTheorem) {
    v.supercyclic = Tri::Yes;
    v.supercyclic_grade = Grade::ProvenByTheorem;
  }
}

}  // namespace

Verdict classify_dynamics(const LambdaSpec& lambda, const SymbolSpec& phi, const ClassifierConfig& cfg) {
  cfg.validate();
  const auto cs = phi.coeffs.coeffs();
  if (std::all_of(cs.begin(), cs.end(), [](cplx c) { return c == cplx{}; })) {
    throw std::invalid_argument("classify_dynamics: phi must be nonzero");
  }

  Verdict v;
  v.rotation = classify_rotation(lambda, cfg.q_max, cfg.rotation_tol);
  v.bound = default_bound(phi);
  const cplx lam = v.rotation.lambda;
  const double c0 = std::abs(phi.coeffs.constant_term());

  switch (v.rotation.kind) {
    case RotationKind::Zero: {
      v.dynamics = Dynamics::NotHypercyclic;
      v.grade = Grade::ProvenByTheorem;
      v.rule = "lambda-zero: T = R_0 phi(B) has rank one, onto the constants";
      v.hypercyclic = Tri::No;
      // ||T^n|| <= ||phi||_1 |phi(0)|^{n-1}
      const double l1 = ell1(phi);
      if (c0 <= 1.0) {
        v.bound = {OrbitBound::Kind::PowerBounded, std::max(1.0, l1), 1.0, "||phi||_1 |phi(0)|^{n-1}"};
      } else {
        v.bound = {OrbitBound::Kind::Geometric, std::max(1.0, l1 / c0), c0, "||phi||_1 |phi(0)|^{n-1}"};
      }
      return v;
    }

    case RotationKind::OutsideDisk:
      v.dynamics = Dynamics::NoEigenoperatorExists;
      v.grade = Grade::ProvenByTheorem;
      v.rule = "outside-disk: B has no extended lambda-eigenoperator for |lambda| > 1";
      return v;

    case RotationKind::InsideDisk: {
      v.hypercyclic = Tri::No;
      v.grade = Grade::ProvenByTheorem;
      v.supercyclic_grade = Grade::ProvenByTheorem;
      if (c0 <= cfg.zero_tol) {
        v.dynamics = Dynamics::SupercyclicNotHypercyclic;
        v.supercyclic = Tri::Yes;
        v.rule = "inside-disk: not hypercyclic for |lambda| < 1; phi(0) = 0 gives a right inverse, hence supercyclic";
      } else {
        v.dynamics = Dynamics::NotSupercyclic;
        v.supercyclic = Tri::No;
        v.rule = "inside-disk: not hypercyclic for |lambda| < 1; phi(0) != 0 rules out supercyclicity";
        // ||phi(lambda^j .)||_inf <= |c_0| (1 + C |lambda|^j), C = sum_{k>=1} |c_k| / |c_0|
        const double c = (ell1(phi) - c0) / c0;
        const double logk = c / (1.0 - std::abs(lam));
        if (logk < 700.0) {
          v.bound = {OrbitBound::Kind::Geometric, std::exp(logk), c0, "|phi(0)|^n exp(C / (1 - |lambda|))"};
        }
      }
      return v;
    }

    case RotationKind::RootOfUnity: {
      const std::size_t q = v.rotation.order;
      const ProductSymbol pq = product_symbol(phi, lam, q);
      const std::size_t radii = pq.f.order() > 512 ? 16 : cfg.grid_radii;
      const ModulusExtrema ext =
          modulus_extrema(pq.f, {radii, angles_for(pq.f.order(), cfg.grid_angles), phi.polynomial, pq.tail});
      v.extrema = ext;
      v.relation = circle_intersection_test(ext, cfg.margin);
      const std::string head = "root-of-unity(q=" + std::to_string(q) + "): hypercyclic iff Phi_q(D) meets the circle; ";
      switch (*v.relation) {
        case CircleRelation::Intersects:
          v.dynamics = Dynamics::Hypercyclic;
          v.grade = Grade::ProvenByTheorem;
          v.rule = head + "Intersects";
          mark_hypercyclic(v, v.grade);
          break;
        case CircleRelation::InsideDisk:
        case CircleRelation::OutsideDisk:
          v.dynamics = Dynamics::NotHypercyclic;
          v.grade = Grade::ProvenByTheorem;
          v.rule = head + std::string(to_string(*v.relation));
          v.hypercyclic = Tri::No;
          break;
        case CircleRelation::Uncertain:
          v.dynamics = Dynamics::Undetermined;
          v.grade = Grade::Undetermined;
          v.rule = head + "Uncertain at margin " + fmt(cfg.margin);
          break;
      }
      // Envelopes of the partial products give a certified orbit bound.
      const std::size_t deg = symbol_degree(phi);
      if (q * std::max<std::size_t>(deg, 1) <= 4096 && q <= 256) {
        std::vector<double> s{1.0};
        for (std::size_t r = 1; r < q; ++r) s.push_back(product_extrema(phi, lam, r, cfg).sup_grid_envelope);
        s.push_back(ext.sup_grid_envelope);
        v.bound = periodic_bound(s, q);
      }
      return v;
    }

    case RotationKind::IrrationalRotation:
      break;
  }

  // Irrational rotation.
  const ModulusExtrema ext = modulus_extrema(
      phi.coeffs, {cfg.grid_radii, angles_for(symbol_degree(phi) + 1, cfg.grid_angles), phi.polynomial, phi.tail_bound(1.0)});
  v.extrema = ext;
  v.relation = circle_intersection_test(ext, cfg.margin);
  if (*v.relation == CircleRelation::InsideDisk || *v.relation == CircleRelation::OutsideDisk) {
    v.dynamics = Dynamics::NotHypercyclic;
    v.grade = Grade::ProvenByTheorem;
    v.hypercyclic = Tri::No;
    v.rule = "irrational: phi(D) does not meet the circle (" + std::string(to_string(*v.relation)) + ")";
    if (*v.relation == CircleRelation::InsideDisk) {
      v.bound = {OrbitBound::Kind::PowerBounded, 1.0, 1.0, "||phi||_inf <= 1"};
    } else {
      v.bound = {OrbitBound::Kind::Geometric, 1.0, ext.sup_grid_envelope, "||phi||_inf^n"};
    }
    return v;
  }

  const ZeroCertificate zero = certify_zero(phi, cfg);
  v.zero_count = zero.count;
  const bool c0_at_least_one = phi.exact_constant ? c0 >= 1.0 : c0 >= 1.0 + cfg.margin;
  const bool c0_below_one = phi.exact_constant ? c0 < 1.0 : c0 < 1.0 - cfg.margin;
  const bool c0_above_one = phi.exact_constant ? c0 > 1.0 : c0 > 1.0 + cfg.margin;

  if (c0_at_least_one && zero.certified) {
    v.dynamics = Dynamics::Hypercyclic;
    v.grade = Grade::ProvenByTheorem;
    v.rule = "irrational: |phi(0)| >= 1 and phi has a zero in D (" + zero.text + ")";
    mark_hypercyclic(v, v.grade);
    return v;
  }

  // |phi(0)| < 1 with a zero: c T is hypercyclic for c |phi(0)| >= 1, so T is supercyclic.
  const bool scaled = c0_below_one && zero.certified && c0 > 0.0;
  if (scaled) {
    v.supercyclic = Tri::Yes;
    v.supercyclic_grade = Grade::ProvenByTheorem;
    v.notes.push_back("supercyclic: |phi(0)| < 1 with a zero in D, so c T is hypercyclic for c = 1/|phi(0)|");
  }

  const WitnessReport psi = witness_search(WitnessKind::PsiToZero, phi.coeffs, lam, cfg.schedule, cfg.witness_grid,
                                           cfg.thresholds);
  const WitnessReport omega = witness_search(WitnessKind::OmegaBoundedBelow, phi.coeffs, lam, cfg.schedule,
                                             cfg.witness_grid, cfg.thresholds);
  v.witnesses = {psi, omega};
  if (psi.satisfied && omega.satisfied) {
    v.dynamics = Dynamics::Hypercyclic;
    v.grade = Grade::NumericalEvidence;
    v.hypercyclic = Tri::Yes;
    v.rule = "irrational: Psi_n -> 0 at one point and |Omega_n| bounded below at another";
    return v;
  }

  const double log_inf = std::log(cfg.thresholds.tol_inf);
  if (c0_below_one || c0_above_one) {
    const WitnessKind kind = c0_below_one ? WitnessKind::OmegaToInfinity : WitnessKind::InvPsiToInfinity;
    const WitnessReport w = witness_search(kind, phi.coeffs, lam, cfg.schedule, cfg.witness_grid, cfg.thresholds);
    v.witnesses.push_back(w);
    if (w.satisfied || w.running_grid_max.back() >= log_inf) {
      v.dynamics = Dynamics::Hypercyclic;
      v.grade = Grade::NumericalEvidence;
      v.hypercyclic = Tri::Yes;
      v.rule = c0_below_one ? "irrational: Omega_n not locally bounded and |phi(0)| < 1"
                            : "irrational: 1/Psi_n not locally bounded and |phi(0)| > 1";
      return v;
    }
  }

  const PowerBoundReport probe =
      power_bound_probe(phi.coeffs, lam, cfg.power_probe_n, {8, 64, phi.polynomial, phi.tail_bound(1.0)});
  v.power_probe = probe;
  // inf |Phi_n| >= c > 0 needs inf |phi| > 0 first; grid minima miss zeros on or near the circle
  const bool inverse_bounded = probe.inverse_bounded && ext.inf_grid_envelope > 0.0;
  if (probe.inverse_bounded && !inverse_bounded) {
    v.notes.push_back("inverse power-bound probe ignored: inf |phi| over the disk is not certified positive");
  }
  if (probe.bounded || inverse_bounded) {
    v.dynamics = Dynamics::NotHypercyclic;
    v.grade = Grade::NumericalEvidence;
    v.hypercyclic = Tri::No;
    v.rule = probe.bounded ? "irrational: ||Phi_n||_inf appears bounded (power bounded)"
                           : "irrational: inf |Phi_n| appears bounded below (inverse power bounded)";
    return v;
  }

  if (scaled) {
    v.dynamics = Dynamics::Supercyclic;
    v.grade = Grade::NumericalEvidence;
    v.rule = "irrational: |phi(0)| < 1 with a zero in D and no hypercyclicity witness";
    return v;
  }

  v.dynamics = Dynamics::Undetermined;
  v.grade = Grade::Undetermined;
  v.rule = "irrational: no rule fired";
  if (std::abs(c0 - 1.0) <= cfg.margin) v.notes.push_back("|phi(0)| = 1 with an irrational rotation is left open");
  return v;
}

SufficientReport sufficient_condition_report(const LambdaSpec& lambda, const SymbolSpec& phi,
                                             const ClassifierConfig& cfg) {
  cfg.validate();
  const RotationClass rc = classify_rotation(lambda, cfg.q_max, cfg.rotation_tol);
  if (rc.kind != RotationKind::RootOfUnity && rc.kind != RotationKind::IrrationalRotation) {
    throw std::invalid_argument("sufficient_condition_report: requires |lambda| = 1");
  }
  SufficientReport rep;
  const double c0 = std::abs(phi.coeffs.constant_term());
  const bool unit = phi.exact_constant ? c0 == 1.0 : std::abs(c0 - 1.0) <= cfg.zero_tol;

  const ZeroCertificate zero = certify_zero(phi, cfg);
  if (zero.certified) rep.firings.push_back({1, CriterionCondition::X0, zero.text});
  if (!unit && c0 < 1.0) rep.firings.push_back({2, CriterionCondition::X0, "|phi(0)| = " + fmt(c0) + " < 1"});
  if (!unit && c0 > 1.0) rep.firings.push_back({3, CriterionCondition::Y0, "|phi(0)| = " + fmt(c0) + " > 1"});
  if (unit && rc.kind == RotationKind::RootOfUnity) {
    const std::string cert = "|phi(0)| = 1, lambda^" + std::to_string(rc.order) + " = 1";
    rep.firings.push_back({4, CriterionCondition::X0, cert});
    rep.firings.push_back({4, CriterionCondition::Y0, cert});
  }
  if (unit && rc.kind == RotationKind::IrrationalRotation) rep.undetermined = true;
  for (const auto& f : rep.firings) (f.condition == CriterionCondition::X0 ? rep.x0 : rep.y0) = true;
  return rep;
}

}  // namespace hardylab
