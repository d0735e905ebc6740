#include "hardylab/disk_geometry.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hardylab/errors.hpp"

namespace hardylab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxContourSamples = std::size_t{1} << 20;

struct ContourPass {
  double min_modulus = std::numeric_limits<double>::infinity();
  double winding = 0.0;
};

ContourPass trace_contour(const CoefficientFunction& f, double r, std::size_t samples) {
  ContourPass pass;
  const double step = kTwoPi / static_cast<double>(samples);
  const cplx first = evaluate(f, std::polar(r, 0.0));
  cplx prev = first;
  pass.min_modulus = std::abs(first);
  double total = 0.0;
  for (std::size_t k = 1; k <= samples; ++k) {
    const cplx cur = k == samples ? first : evaluate(f, std::polar(r, step * static_cast<double>(k)));
    pass.min_modulus = std::min(pass.min_modulus, std::abs(cur));
    if (prev != cplx{} && cur != cplx{}) total += std::arg(cur / prev);
    prev = cur;
  }
  pass.winding = total / kTwoPi;
  return pass;
}

/// Golden-section search for an extremum of g on [a, b].
std::pair<double, double> golden(const std::function<double(double)>& g, double a, double b, bool maximize) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto better = [maximize](double x, double y) { return maximize ? x > y : x < y; };
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = g(c);
  double gd = g(d);
  for (int it = 0; it < 90 && (b - a) > 1e-14; ++it) {
    if (better(gc, gd)) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = g(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, g(x)};
}

/// Indices of the `count` most extreme local extrema of a periodic sample sequence.
std::vector<std::size_t> local_extrema(const std::vector<double>& v, bool maximize, std::size_t count) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < n; ++j) {
    const double l = v[(j + n - 1) % n];
    const double r = v[(j + 1) % n];
    const bool ext = maximize ? (v[j] >= l && v[j] >= r) : (v[j] <= l && v[j] <= r);
    if (ext) idx.push_back(j);
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return maximize ? v[a] > v[b] : v[a] < v[b];
  });
  if (idx.size() > count) idx.resize(count);
  return idx;
}

}  // namespace

ZeroCount count_zeros(const CoefficientFunction& phi, double radius, std::size_t samples, double zero_tol) {
  if (!(radius > 0.0 && radius < 1.0)) throw std::invalid_argument("count_zeros: radius must lie in (0, 1)");
  samples = std::max<std::size_t>(samples, 16);

  for (int attempt = 0; attempt <= 3; ++attempt) {
    const double r = radius - radius * 1e-3 * attempt;
    const double lip = derivative_bound(phi, r);
    std::size_t m = samples;
    while (true) {
      const ContourPass pass = trace_contour(phi, r, m);
      if (pass.min_modulus <= zero_tol) break;  // perturb the radius
      const double arc = kTwoPi * r / static_cast<double>(m);
      const bool certified = lip * arc <= 0.5 * pass.min_modulus;
      if (certified || m >= kMaxContourSamples) {
        return {static_cast<int>(std::lround(pass.winding)), r, m, pass.min_modulus, lip, certified};
      }
      m *= 2;
    }
  }
  std::ostringstream os;
  os << "|f| below " << zero_tol << " on every contour near radius " << radius;
  throw OnCircleZero(os.str());
}

std::vector<cplx> locate_zeros(const CoefficientFunction& phi, double radius, std::size_t samples) {
  const ZeroCount zc = count_zeros(phi, radius, samples);
  const int m = zc.zeros;
  if (m <= 0) return {};
  const double r = zc.radius;
  const std::size_t ns = std::max(samples, zc.samples);
  const double step = kTwoPi / static_cast<double>(ns);

  // Power sums s_j = (1 / 2 pi i) \oint z^j f'/f dz by the trapezoid rule.
  std::vector<cplx> s(static_cast<std::size_t>(m) + 1);
  for (std::size_t k = 0; k < ns; ++k) {
    const cplx z = std::polar(r, step * static_cast<double>(k));
    const cplx q = z * evaluate_derivative(phi, z) / evaluate(phi, z);
    cplx zj = 1.0;
    for (int j = 1; j <= m; ++j) {
      zj *= z;
      s[static_cast<std::size_t>(j)] += zj * q;
    }
  }
  for (auto& v : s) v /= static_cast<double>(ns);

  // Newton identities -> elementary symmetric polynomials.
  std::vector<cplx> e(static_cast<std::size_t>(m) + 1);
  e[0] = 1.0;
  for (int k = 1; k <= m; ++k) {
    cplx acc{};
    for (int i = 1; i <= k; ++i) {
      const double sign = (i % 2 == 1) ? 1.0 : -1.0;
      acc += sign * e[static_cast<std::size_t>(k - i)] * s[static_cast<std::size_t>(i)];
    }
    e[static_cast<std::size_t>(k)] = acc / static_cast<double>(k);
  }

  // Companion matrix of z^m - e1 z^{m-1} + e2 z^{m-2} - ...
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(m, m);
  for (int i = 1; i < m; ++i) comp(i, i - 1) = 1.0;
  for (int k = 1; k <= m; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const cplx a = sign * e[static_cast<std::size_t>(k)];  // coefficient of z^{m-k}
    comp(m - k, m - 1) = -a;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  std::vector<cplx> roots;
  for (int i = 0; i < m; ++i) {
    cplx z = solver.eigenvalues()(i);
    for (int it = 0; it < 60; ++it) {
      const cplx d = evaluate_derivative(phi, z);
      if (d == cplx{}) break;
      const cplx dz = evaluate(phi, z) / d;
      z -= dz;
      if (std::abs(dz) <= 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : std::arg(a) < std::arg(b);
  });
  return roots;
}

ModulusExtrema modulus_extrema(const CoefficientFunction& phi, const ExtremaOptions& opts) {
  if (opts.radii < 2 || opts.angles < 8) throw std::invalid_argument("modulus_extrema: grid too coarse");
  ModulusExtrema out;
  out.radii = opts.radii;
  out.angles = opts.angles;
  const double R = opts.polynomial ? 1.0 : 1.0 - 1e-6;
  out.outer_radius = R;

  const double step = kTwoPi / static_cast<double>(opts.angles);
  auto modulus_at = [&](double r, double theta) { return std::abs(evaluate(phi, std::polar(r, theta))); };

  double sup = -1.0;
  double inf = std::numeric_limits<double>::infinity();
  cplx sup_pt = 0.0;
  cplx inf_pt = 0.0;
  auto consider = [&](cplx z, double v) {
    if (v > sup) {
      sup = v;
      sup_pt = z;
    }
    if (v < inf) {
      inf = v;
      inf_pt = z;
    }
  };

  consider(0.0, std::abs(phi.constant_term()));
  for (std::size_t i = 1; i + 1 < opts.radii; ++i) {
    const double r = R * static_cast<double>(i) / static_cast<double>(opts.radii - 1);
    for (std::size_t j = 0; j < opts.angles; ++j) {
      const double th = step * static_cast<double>(j);
      consider(std::polar(r, th), modulus_at(r, th));
    }
  }
  std::vector<double> ring(opts.angles);
  for (std::size_t j = 0; j < opts.angles; ++j) {
    const double th = step * static_cast<double>(j);
    ring[j] = modulus_at(R, th);
    consider(std::polar(R, th), ring[j]);
  }
  const double ring_max = *std::max_element(ring.begin(), ring.end());
  const double ring_min = *std::min_element(ring.begin(), ring.end());

  // The sup over the disk is attained on the boundary.
  auto g = [&](double th) { return modulus_at(R, th); };
  for (std::size_t j : local_extrema(ring, true, 4)) {
    const double th = step * static_cast<double>(j);
    const auto [x, v] = golden(g, th - step, th + step, true);
    if (v > sup) {
      sup = v;
      sup_pt = std::polar(R, x);
    }
  }

  const double lip = derivative_bound(phi, R);
  const double lip_outer = opts.polynomial ? 0.0 : derivative_bound(phi, 1.0);
  const double margin = lip * R * step / 2.0 + lip_outer * (1.0 - R) + opts.tail_bound;
  out.sup_lower = std::max(0.0, sup - opts.tail_bound);
  out.sup_grid_envelope = ring_max + margin;
  out.sup_point = sup_pt;

  // Without zeros inside, the inf is also attained on the boundary.
  int zeros = -1;
  try {
    const double zr = opts.polynomial ? 1.0 - 1e-9 : R;
    zeros = count_zeros(phi, zr, std::max<std::size_t>(4 * opts.angles, 1024)).zeros;
  } catch (const OnCircleZero&) {
    zeros = -1;
  }
  out.zeros_inside = std::max(zeros, 0);

  if (zeros > 0) {
    for (const cplx& z : locate_zeros(phi, opts.polynomial ? 1.0 - 1e-9 : R)) {
      const double v = std::abs(evaluate(phi, z));
      if (std::abs(z) > 1.0 - 1e-4) out.near_boundary_zero = true;
      if (v < inf && std::abs(z) <= 1.0) {
        inf = v;
        inf_pt = z;
      }
    }
    out.inf_grid_envelope = 0.0;
  } else if (zeros < 0) {
    out.inf_grid_envelope = 0.0;
  } else {
    for (std::size_t j : local_extrema(ring, false, 4)) {
      const double th = step * static_cast<double>(j);
      const auto [x, v] = golden(g, th - step, th + step, false);
      if (v < inf) {
        inf = v;
        inf_pt = std::polar(R, x);
      }
    }
    out.inf_grid_envelope = std::max(0.0, ring_min - margin);
  }
  out.inf_upper = inf + opts.tail_bound;
  out.inf_point = inf_pt;
  return out;
}

std::string_view to_string(CircleRelation r) {
  switch (r) {
    case CircleRelation::Intersects: return "Intersects";
    case CircleRelation::InsideDisk: return "InsideDisk";
    case CircleRelation::OutsideDisk: return "OutsideDisk";
    case CircleRelation::Uncertain: return "Uncertain";
  }
  return "Uncertain";
}

CircleRelation circle_intersection_test(const ModulusExtrema& e, double margin) {
  if (!(margin > 0.0)) throw std::invalid_argument("circle_intersection_test: margin must be positive");
  if (e.sup_grid_envelope < 1.0 - margin) return CircleRelation::InsideDisk;
  if (e.inf_grid_envelope > 1.0 + margin) return CircleRelation::OutsideDisk;
  if (e.inf_upper < 1.0 - margin && e.sup_lower > 1.0 + margin) return CircleRelation::Intersects;
  return CircleRelation::Uncertain;
}

CircleRelation circle_intersection_test(const CoefficientFunction& phi, double margin, const ExtremaOptions& opts) {
  return circle_intersection_test(modulus_extrema(phi, opts), margin);
}

PowerBoundReport power_bound_probe(const CoefficientFunction& phi, cplx lambda, std::size_t n_max,
                                   const ExtremaOptions& grid) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-9) throw std::invalid_argument("power_bound_probe: requires |lambda| = 1");
  if (n_max < 2) throw std::invalid_argument("power_bound_probe: n_max must be >= 2");
  const double R = grid.polynomial ? 1.0 : 1.0 - 1e-6;
  const DomainPolicy policy = grid.polynomial ? DomainPolicy::ClosedDisk : DomainPolicy::OpenDisk;
  const ProductSequence seq(phi, lambda, ProductKind::Phi);

  std::vector<ProductCursor> interior;
  std::vector<ProductCursor> boundary;
  interior.emplace_back(seq, 0.0, policy);
  const double step = kTwoPi / static_cast<double>(grid.angles);
  for (std::size_t i = 1; i < grid.radii; ++i) {
    const double r = R * static_cast<double>(i) / static_cast<double>(grid.radii - 1);
    for (std::size_t j = 0; j < grid.angles; ++j) {
      auto& bucket = (i + 1 == grid.radii) ? boundary : interior;
      bucket.emplace_back(seq, std::polar(r, step * static_cast<double>(j)), policy);
    }
  }

  PowerBoundReport rep;
  rep.sup_by_n.reserve(n_max);
  rep.inf_by_n.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    double log_sup = -std::numeric_limits<double>::infinity();
    double log_inf = std::numeric_limits<double>::infinity();
    for (auto& c : boundary) {
      c.advance();
      log_sup = std::max(log_sup, c.value().log_abs);
      log_inf = std::min(log_inf, c.value().log_abs);
    }
    for (auto& c : interior) {
      c.advance();
      log_inf = std::min(log_inf, c.value().log_abs);
    }
    rep.sup_by_n.push_back(std::exp(log_sup));
    rep.inf_by_n.push_back(std::exp(log_inf));
  }
  const std::size_t half = n_max / 2;
  const auto mid_sup = rep.sup_by_n.begin() + static_cast<std::ptrdiff_t>(half);
  const auto mid_inf = rep.inf_by_n.begin() + static_cast<std::ptrdiff_t>(half);
  const double first_sup = *std::max_element(rep.sup_by_n.begin(), mid_sup);
  const double second_sup = *std::max_element(mid_sup, rep.sup_by_n.end());
  const double first_inf = *std::min_element(rep.inf_by_n.begin(), mid_inf);
  const double second_inf = *std::min_element(mid_inf, rep.inf_by_n.end());
  rep.sup = std::max(first_sup, second_sup);
  rep.inf = std::min(first_inf, second_inf);
  rep.bounded = std::isfinite(rep.sup) && second_sup <= first_sup * (1.0 + 1e-9);
  rep.inverse_bounded = first_inf > 0.0 && second_inf >= first_inf * (1.0 - 1e-9);
  return rep;
}

std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::PsiToZero: return "psi-zero";
    case WitnessKind::OmegaBoundedBelow: return "omega-lower";
    case WitnessKind::OmegaToInfinity: return "omega-infinity";
    case WitnessKind::InvPsiToInfinity: return "inv-psi-infinity";
  }
  return "psi-zero";
}

std::string_view to_string(Conclusion c) {
  switch (c) {
    case Conclusion::TendsToZero: return "TendsToZero";
    case Conclusion::BoundedBelow: return "BoundedBelow";
    case Conclusion::TendsToInfinity: return "TendsToInfinity";
    case Conclusion::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::vector<cplx> grid_points(const WitnessGrid& grid) {
  if (!grid.points.empty()) return grid.points;
  std::vector<cplx> pts{0.0};
  const double step = kTwoPi / static_cast<double>(std::max<std::size_t>(grid.angles, 1));
  for (std::size_t i = 1; i <= grid.radii; ++i) {
    const double r = grid.max_radius * static_cast<double>(i) / static_cast<double>(grid.radii);
    for (std::size_t j = 0; j < grid.angles; ++j) pts.push_back(std::polar(r, step * static_cast<double>(j)));
  }
  return pts;
}

std::vector<std::size_t> default_schedule(std::size_t n_cap) {
  std::vector<std::size_t> s;
  for (std::size_t k = 1; k <= std::min<std::size_t>(512, n_cap); ++k) s.push_back(k);
  for (int k = 1;; ++k) {
    const double v = std::ceil(std::pow(1.2, k));
    if (v >= static_cast<double>(n_cap)) break;
    const auto n = static_cast<std::size_t>(v);
    if (n > s.back()) s.push_back(n);
  }
  if (s.empty() || s.back() < n_cap) s.push_back(n_cap);
  return s;
}

Conclusion classify_trajectory(const std::vector<double>& v, const WitnessThresholds& t) {
  if (v.empty()) return Conclusion::Inconclusive;
  const std::size_t w_count = std::max<std::size_t>(t.window, 1);
  const std::size_t w_len = std::max<std::size_t>(1, v.size() / (2 * w_count));
  const std::size_t used = std::min(v.size(), w_count * w_len);
  const std::size_t start = v.size() - used;

  std::vector<double> wmax;
  std::vector<double> wmin;
  for (std::size_t b = start; b < v.size(); b += w_len) {
    const auto first = v.begin() + static_cast<std::ptrdiff_t>(b);
    const auto last = v.begin() + static_cast<std::ptrdiff_t>(std::min(v.size(), b + w_len));
    wmax.push_back(*std::max_element(first, last));
    wmin.push_back(*std::min_element(first, last));
  }
  const bool decreasing = std::is_sorted(wmax.rbegin(), wmax.rend());
  const bool increasing = std::is_sorted(wmin.begin(), wmin.end());

  if (v.back() >= std::log(t.tol_inf) && increasing) return Conclusion::TendsToInfinity;
  if (v.back() <= std::log(t.tol_zero) && decreasing) return Conclusion::TendsToZero;
  if (*std::min_element(v.begin(), v.end()) >= std::log(t.bounded_below_floor)) return Conclusion::BoundedBelow;
  return Conclusion::Inconclusive;
}

WitnessReport witness_search(WitnessKind kind, const CoefficientFunction& phi, cplx lambda,
                             const std::vector<std::size_t>& schedule, const WitnessGrid& grid,
                             const WitnessThresholds& thresholds) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-9) throw std::invalid_argument("witness_search: requires |lambda| = 1");
  if (schedule.empty() || !std::is_sorted(schedule.begin(), schedule.end()) || schedule.front() == 0) {
    throw std::invalid_argument("witness_search: schedule must be increasing positive integers");
  }
  const bool uses_psi = kind == WitnessKind::PsiToZero || kind == WitnessKind::InvPsiToInfinity;
  const ProductSequence seq(phi, lambda, uses_psi ? ProductKind::Psi : ProductKind::Omega);
  const double sign = kind == WitnessKind::InvPsiToInfinity ? -1.0 : 1.0;
  const auto pts = grid_points(grid);

  WitnessReport rep;
  rep.kind = kind;
  rep.subsequence = schedule;
  rep.thresholds = thresholds;
  rep.points_scanned = pts.size();
  rep.running_grid_max.assign(schedule.size(), -std::numeric_limits<double>::infinity());

  auto satisfies = [kind](Conclusion c) {
    switch (kind) {
      case WitnessKind::PsiToZero: return c == Conclusion::TendsToZero;
      case WitnessKind::OmegaBoundedBelow: return c == Conclusion::BoundedBelow || c == Conclusion::TendsToInfinity;
      case WitnessKind::OmegaToInfinity:
      case WitnessKind::InvPsiToInfinity: return c == Conclusion::TendsToInfinity;
    }
    return false;
  };
  // Larger score = better witness for the requested behaviour.
  auto score = [kind](const std::vector<double>& tr) {
    if (kind == WitnessKind::PsiToZero) return -tr.back();
    if (kind == WitnessKind::OmegaBoundedBelow) return 0.0;  // first satisfying point in scan order
    return tr.back();
  };

  bool have = false;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < pts.size(); ++p) {
    ProductCursor cur(seq, pts[p]);
    std::vector<double> tr;
    tr.reserve(schedule.size());
    for (std::size_t k = 0; k < schedule.size(); ++k) {
      cur.advance_to(schedule[k]);
      const double v = sign * cur.value().log_abs;
      tr.push_back(v);
      rep.running_grid_max[k] = std::max(rep.running_grid_max[k], v);
    }
    const Conclusion c = classify_trajectory(tr, thresholds);
    switch (c) {
      case Conclusion::TendsToZero: ++rep.count_to_zero; break;
      case Conclusion::BoundedBelow: ++rep.count_bounded_below; break;
      case Conclusion::TendsToInfinity: ++rep.count_to_infinity; break;
      case Conclusion::Inconclusive: ++rep.count_inconclusive; break;
    }
    const bool ok = satisfies(c);
    const double sc = score(tr);
    const bool take = !have ? true
                    : (ok && !rep.satisfied) ? true
                    : (ok == rep.satisfied && sc > best_score);
    if (take) {
      have = true;
      best_score = sc;
      rep.satisfied = ok;
      rep.witness_index = p;
      rep.witness_point = pts[p];
      rep.trajectory = std::move(tr);
      rep.conclusion = c;
    }
  }
  if (!rep.trajectory.empty()) {
    rep.bound_c = std::exp(*std::min_element(rep.trajectory.begin(), rep.trajectory.end()));
  }
  return rep;
}

}  // namespace hardylab
