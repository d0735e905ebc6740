#include "hardylab/cli/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "hardylab/classifier.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/orbit_lab.hpp"
#include "hardylab/report.hpp"
#include "hardylab/shift_operators.hpp"
#include "hardylab/symbol_products.hpp"

namespace hardylab::cli {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

/// A real literal: exact rational when possible, otherwise strtod with full consumption.
double parse_real(const std::string& s, bool& exact) {
  try {
    return Rational::parse(s).value();
  } catch (const std::invalid_argument&) {
  }
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (!s.empty() && s[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) throw ConfigError("malformed number: '" + s + "'");
  exact = false;
  return v;
}

Rational exact_part(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::invalid_argument&) {
    return {0, 0};  // marks "not exact"
  }
}

/// Splits "a+bi" into {"a", "+b"}; a pure imaginary gives {"", "b"}.
std::pair<std::string, std::string> split_complex(const std::string& s) {
  if (s.empty()) throw ConfigError("empty complex literal");
  if (s.back() != 'i') return {s, ""};
  const std::string body = s.substr(0, s.size() - 1);
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') return {body.substr(0, k), body.substr(k)};
  }
  return {"", body};
}

std::string imag_digits(std::string im) {
  if (im.empty() || im == "+") return "1";
  if (im == "-") return "-1";
  return im;
}

std::string fmt(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot open output file: " + path);
    f << content;
    if (!f.flush()) throw ConfigError("cannot write output file: " + path);
  }
  fs::rename(tmp, target);
}

std::string csv_header(const std::string& command, const std::string& effective) {
  std::ostringstream os;
  os << "# hardylab " << command << "\n";
  std::istringstream in(effective);
  for (std::string line; std::getline(in, line);) {
    if (!trim(line).empty()) os << "# " << line << "\n";
  }
  return os.str();
}

struct Options {
  std::string lambda;
  std::string phi;
  std::string out = "-";
  std::size_t truncation = 256;

  // classify
  std::size_t q_max = 10000;
  double rotation_tol = 1e-9;
  double zero_tol = 1e-12;
  double margin = 1e-6;
  std::size_t grid_radii = 32;
  std::size_t grid_angles = 256;
  double tol_zero = 1e-40;
  double tol_inf = 1e40;
  std::size_t window = 8;
  double floor = 1e-6;
  std::size_t n_cap = 100000;
  std::size_t power_probe_n = 256;
  std::size_t witness_radii = 4;
  std::size_t witness_angles = 16;
  double witness_max_radius = 0.95;
  double zero_radius = 0.0;
  bool snap = false;

  // image
  std::size_t n = 0;
  std::size_t samples = 1024;
  double radius = 0.0;

  // products
  std::string z = "0.5";
  bool limit = false;
  double tol = 1e-12;

  // witness
  std::string kind = "psi-zero";

  // orbit
  std::size_t steps = 1000;
  std::string x0 = "e0";
  std::uint64_t seed = 1;
  std::size_t targets = 0;
  std::size_t target_degree = 4;
  std::size_t gap = 40;
};

void add_symbol_options(CLI::App* c, Options& o) {
  c->add_option("--lambda", o.lambda, "lambda: i, 0.5, 1/2, 3/5+4/5i, rot:p/q, irr:theta, golden")->required();
  c->add_option("--phi", o.phi, "phi: c0,c1,... | @file | psi:p | phi0 | phi1")->required();
  c->add_option("--out,-o", o.out, "output file ('-' for stdout)")->capture_default_str();
}

void add_threshold_options(CLI::App* c, Options& o) {
  c->add_option("--tol-zero", o.tol_zero, "modulus treated as tending to zero")->capture_default_str();
  c->add_option("--tol-inf", o.tol_inf, "modulus treated as tending to infinity")->capture_default_str();
  c->add_option("--window", o.window, "number of trailing windows checked for monotonicity")->capture_default_str();
  c->add_option("--floor", o.floor, "bounded-below floor")->capture_default_str();
  c->add_option("--n-cap", o.n_cap, "last index of the witness schedule")->capture_default_str();
  c->add_option("--witness-radii", o.witness_radii, "witness grid rings")->capture_default_str();
  c->add_option("--witness-angles", o.witness_angles, "witness grid points per ring")->capture_default_str();
  c->add_option("--witness-max-radius", o.witness_max_radius, "outer witness ring")->capture_default_str();
}

WitnessThresholds thresholds_of(const Options& o) { return {o.tol_zero, o.tol_inf, o.window, o.floor}; }
WitnessGrid witness_grid_of(const Options& o) { return {o.witness_radii, o.witness_angles, o.witness_max_radius, {}}; }

ClassifierConfig classifier_config(const Options& o) {
  ClassifierConfig c;
  c.truncation = o.truncation;
  c.q_max = o.q_max;
  c.rotation_tol = o.rotation_tol;
  c.zero_tol = o.zero_tol;
  c.margin = o.margin;
  c.grid_radii = o.grid_radii;
  c.grid_angles = o.grid_angles;
  c.thresholds = thresholds_of(o);
  if (o.n_cap < 1) throw ConfigError("--n-cap must be positive");
  c.schedule = default_schedule(o.n_cap);
  c.power_probe_n = o.power_probe_n;
  c.witness_grid = witness_grid_of(o);
  c.zero_radius = o.zero_radius;
  c.validate();
  return c;
}

LambdaSpec maybe_snap(LambdaSpec l, const ClassifierConfig& cfg) {
  if (l.form != LambdaSpec::Form::Numeric) return l;
  const RotationClass rc = classify_rotation(l.value, cfg.q_max, cfg.rotation_tol);
  if (rc.kind == RotationKind::RootOfUnity && rc.rotation) return LambdaSpec::rotation(rc.rotation->first, rc.rotation->second);
  return l;
}

std::string cmd_classify(const Options& o, const std::string& effective) {
  const ClassifierConfig cfg = classifier_config(o);
  LambdaSpec lambda = parse_lambda(o.lambda);
  if (o.snap) lambda = maybe_snap(lambda, cfg);
  const SymbolSpec phi = parse_phi(o.phi);
  const Verdict v = classify_dynamics(lambda, phi, cfg);
  nlohmann::json j = verdict_report(lambda, phi, v, cfg);
  if (v.rotation.kind == RotationKind::RootOfUnity || v.rotation.kind == RotationKind::IrrationalRotation) {
    j["sufficient"] = to_json(sufficient_condition_report(lambda, phi, cfg));
  }
  j["effective_options"] = effective;
  return j.dump(2) + "\n";
}

std::string cmd_image(const Options& o, const std::string& effective) {
  const LambdaSpec lambda = parse_lambda(o.lambda);
  const SymbolSpec phi = parse_phi(o.phi);
  if (o.samples < 8) throw ConfigError("--samples must be at least 8");
  std::size_t n = o.n;
  if (n == 0) {
    const RotationClass rc = classify_rotation(lambda);
    n = rc.kind == RotationKind::RootOfUnity ? rc.order : 1;
  }
  const double r = o.radius > 0.0 ? o.radius : (phi.polynomial ? 1.0 : 1.0 - 1e-6);
  if (r > 1.0) throw ConfigError("--radius must lie in (0, 1]");
  const ProductSequence seq(phi.coeffs, lambda.value, ProductKind::Phi);
  const DomainPolicy policy = phi.polynomial ? DomainPolicy::ClosedDisk : DomainPolicy::OpenDisk;

  std::ostringstream os;
  os << csv_header("image", effective);
  os << "# product_order = " << n << "\n# boundary_radius = " << fmt(r) << "\n";
  os << "theta,re,im,modulus,unit_re,unit_im\n";
  for (std::size_t k = 0; k < o.samples; ++k) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(o.samples);
    const cplx w = eval_product(seq, n, std::polar(r, th), policy).value();
    os << fmt(th) << ',' << fmt(w.real()) << ',' << fmt(w.imag()) << ',' << fmt(std::abs(w)) << ','
       << fmt(std::cos(th)) << ',' << fmt(std::sin(th)) << "\n";
  }
  return os.str();
}

std::string cmd_products(const Options& o, const std::string& effective) {
  const LambdaSpec lambda = parse_lambda(o.lambda);
  const SymbolSpec phi = parse_phi(o.phi);
  std::ostringstream os;
  os << csv_header("products", effective);
  if (o.limit) {
    const InfiniteProduct h = infinite_product_limit(phi.coeffs, lambda.value, o.truncation, o.tol);
    os << "# factors_used = " << h.n_used << "\n# tail_bound = " << fmt(h.tail_bound) << "\n";
    os << "k,re,im\n";
    for (std::size_t k = 0; k < h.h.order(); ++k) {
      os << k << ',' << fmt(h.h[k].real()) << ',' << fmt(h.h[k].imag()) << "\n";
    }
    return os.str();
  }
  const cplx z = parse_complex(o.z);
  if (std::abs(z) >= 1.0) throw ConfigError("--z must lie in the open disk");
  const std::size_t count = o.n == 0 ? 16 : o.n;
  const ProductSequence seqs[] = {{phi.coeffs, lambda.value, ProductKind::Phi},
                                  {phi.coeffs, lambda.value, ProductKind::Psi},
                                  {phi.coeffs, lambda.value, ProductKind::Omega}};
  std::vector<ProductCursor> cursors;
  for (const auto& s : seqs) cursors.emplace_back(s, z);
  bool alive[3] = {true, true, true};
  os << "n,log_abs_phi,arg_phi,log_abs_psi,arg_psi,log_abs_omega,arg_omega\n";
  for (std::size_t n = 1; n <= count; ++n) {
    os << n;
    for (int s = 0; s < 3; ++s) {
      if (alive[s]) {
        try {
          cursors[static_cast<std::size_t>(s)].advance();
        } catch (const DomainEscape&) {
          alive[s] = false;  // the factor argument left the disk; later rows stay empty
        }
      }
      if (alive[s]) {
        const LogComplex& v = cursors[static_cast<std::size_t>(s)].value();
        os << ',' << fmt(v.log_abs) << ',' << fmt(v.is_zero() ? 0.0 : std::arg(v.phase));
      } else {
        os << ",,";
      }
    }
    os << "\n";
  }
  return os.str();
}

WitnessKind parse_kind(const std::string& k) {
  for (auto w : {WitnessKind::PsiToZero, WitnessKind::OmegaBoundedBelow, WitnessKind::OmegaToInfinity,
                 WitnessKind::InvPsiToInfinity}) {
    if (k == to_string(w)) return w;
  }
  throw ConfigError("unknown witness kind: " + k);
}

std::string cmd_witness(const Options& o, const std::string& effective) {
  const LambdaSpec lambda = parse_lambda(o.lambda);
  const SymbolSpec phi = parse_phi(o.phi);
  const WitnessKind kind = parse_kind(o.kind);
  if (std::abs(std::abs(lambda.value) - 1.0) > 1e-9) throw ConfigError("witness needs |lambda| = 1");
  if (o.n_cap < 1) throw ConfigError("--n-cap must be positive");
  const WitnessReport w =
      witness_search(kind, phi.coeffs, lambda.value, default_schedule(o.n_cap), witness_grid_of(o), thresholds_of(o));
  nlohmann::json j{{"lambda", to_json(lambda)}, {"phi", to_json(phi)}, {"report", to_json(w)},
                   {"effective_options", effective}};
  return j.dump(2) + "\n";
}

std::string cmd_orbit(const Options& o, const std::string& effective) {
  const LambdaSpec lambda = parse_lambda(o.lambda);
  const SymbolSpec phi = parse_phi(o.phi);
  const std::size_t n = o.truncation;
  if (n < 2) throw ConfigError("--truncation must be at least 2");
  const OperatorMatrix t = build_eigenoperator(lambda.value, phi.coeffs.resized(std::min(phi.coeffs.order(), n)), n);

  std::vector<CoefficientFunction> targets;
  for (std::size_t k = 0; k < o.targets; ++k) {
    targets.push_back(random_function(std::min(n, o.target_degree + 1), std::min(n - 1, o.target_degree), o.seed + 1 + k));
  }
  CoefficientFunction x0 = CoefficientFunction::constant(1.0);
  if (o.x0 == "random") {
    x0 = random_function(n, n - 1, o.seed);
  } else if (o.x0 == "criterion") {
    if (targets.empty()) throw ConfigError("--x0 criterion needs --targets >= 1");
    x0 = criterion_start_vector(lambda.value, phi.coeffs, targets, o.gap, n);
  } else if (starts_with(o.x0, "@")) {
    x0 = parse_phi(o.x0).coeffs;
  } else if (o.x0 != "e0") {
    throw ConfigError("--x0 must be e0, random, criterion or @file");
  }

  const OrbitTrace tr = simulate_orbit(t, x0, o.steps, targets);
  std::ostringstream os;
  os << csv_header("orbit", effective);
  os << "step,log_norm,renormalized";
  for (std::size_t k = 0; k < targets.size(); ++k) os << ",dist_" << k;
  os << "\n";
  std::size_t next = 0;
  for (std::size_t s = 0; s <= tr.steps; ++s) {
    const bool mark = next < tr.renormalized_at.size() && tr.renormalized_at[next] == s;
    if (mark) ++next;
    os << s << ',' << fmt(tr.log_norms[s]) << ',' << (mark ? 1 : 0);
    for (const auto& d : tr.distances) os << ',' << fmt(d[s]);
    os << "\n";
  }
  return os.str();
}

}  // namespace

cplx parse_complex(const std::string& raw, bool* exact) {
  const std::string s = trim(raw);
  if (s.empty()) throw ConfigError("empty complex literal");
  const auto [re_s, im_s] = split_complex(s);
  bool ex = true;
  const double re = re_s.empty() ? 0.0 : parse_real(re_s, ex);
  const double im = s.back() == 'i' ? parse_real(imag_digits(im_s), ex) : 0.0;
  if (exact) *exact = *exact && ex;
  return {re, im};
}

LambdaSpec parse_lambda(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) throw ConfigError("empty lambda");
  try {
    if (s == "golden") return LambdaSpec::golden();
    if (starts_with(s, "rot:")) {
      const Rational r = Rational::parse(s.substr(4));
      return LambdaSpec::rotation(r.num, r.den);
    }
    if (starts_with(s, "irr:")) {
      bool ex = true;
      return LambdaSpec::irrational(parse_real(s.substr(4), ex), s);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("malformed lambda '") + s + "': " + e.what());
  }
  const auto [re_s, im_s] = split_complex(s);
  const Rational re = re_s.empty() ? Rational{0, 1} : exact_part(re_s);
  const Rational im = s.back() == 'i' ? exact_part(imag_digits(im_s)) : Rational{0, 1};
  if (re.den != 0 && im.den != 0) {
    LambdaSpec l = LambdaSpec::gaussian(re, im);
    l.text = s;
    return l;
  }
  LambdaSpec l = LambdaSpec::numeric(parse_complex(s));
  l.text = s;
  return l;
}

SymbolSpec parse_phi(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) throw ConfigError("empty phi");
  if (s == "phi0") return example_phi0();
  if (s == "phi1") return example_phi1();
  if (starts_with(s, "psi:")) {
    bool ex = true;
    const double p = parse_real(s.substr(4), ex);
    if (!(p > 0.0 && p < 1.0)) throw ConfigError("psi:p needs 0 < p < 1");
    SymbolSpec spec = psi_family(p);
    spec.label = s;
    return spec;
  }
  std::string list = s;
  if (s[0] == '@') {
    std::ifstream f(s.substr(1));
    if (!f) throw ConfigError("cannot read phi file: " + s.substr(1));
    std::ostringstream buf;
    buf << f.rdbuf();
    list = buf.str();
  }
  for (char& c : list) {
    if (c == ',' || c == '\n' || c == '\t' || c == '\r' || c == ';') c = ' ';
  }
  std::istringstream in(list);
  std::vector<cplx> coeffs;
  bool exact = true;
  for (std::string tok; in >> tok;) coeffs.push_back(parse_complex(tok, &exact));
  if (coeffs.empty()) throw ConfigError("phi has no coefficients");
  return polynomial_symbol(std::move(coeffs), exact, s);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hardylab: dynamics of T = R_lambda phi(B) on the Hardy space"};
  app.set_config("--config", "", "read options from a TOML/INI file");
  app.require_subcommand(1, 1);
  Options o;

  auto* classify = app.add_subcommand("classify", "decide hypercyclicity / supercyclicity (JSON report)");
  add_symbol_options(classify, o);
  classify->add_option("--truncation", o.truncation, "matrix truncation order")->capture_default_str();
  classify->add_option("--q-max", o.q_max, "largest root-of-unity order searched")->capture_default_str();
  classify->add_option("--rotation-tol", o.rotation_tol, "tolerance for |lambda^q - 1|")->capture_default_str();
  classify->add_option("--zero-tol", o.zero_tol, "modulus treated as zero")->capture_default_str();
  classify->add_option("--margin", o.margin, "circle intersection margin")->capture_default_str();
  classify->add_option("--grid-radii", o.grid_radii, "extrema grid rings")->capture_default_str();
  classify->add_option("--grid-angles", o.grid_angles, "extrema grid angles")->capture_default_str();
  classify->add_option("--power-probe-n", o.power_probe_n, "products examined by the power-bound probe")
      ->capture_default_str();
  classify->add_option("--zero-radius", o.zero_radius, "zero-count contour radius (0 = automatic)")
      ->capture_default_str();
  classify->add_flag("--snap", o.snap, "replace a numeric root of unity by the exact rotation p/q");
  add_threshold_options(classify, o);

  auto* image = app.add_subcommand("image", "boundary curve of Phi_n (CSV)");
  add_symbol_options(image, o);
  image->add_option("--n", o.n, "product order (0 = q for roots of unity, else 1)")->capture_default_str();
  image->add_option("--samples", o.samples, "boundary samples")->capture_default_str();
  image->add_option("--radius", o.radius, "boundary radius (0 = automatic)")->capture_default_str();

  auto* products = app.add_subcommand("products", "Phi_n, Psi_n, Omega_n at a point, or the infinite product (CSV)");
  add_symbol_options(products, o);
  products->add_option("--n", o.n, "number of factors (0 = 16)")->capture_default_str();
  products->add_option("--z", o.z, "evaluation point")->capture_default_str();
  products->add_flag("--limit", o.limit, "emit the coefficients of lim Phi_n (|lambda| < 1, phi(0) = 1)");
  products->add_option("--tol", o.tol, "certified H2 tail tolerance for --limit")->capture_default_str();
  products->add_option("--truncation", o.truncation, "coefficients kept for --limit")->capture_default_str();

  auto* witness = app.add_subcommand("witness", "witness search along a schedule (JSON report)");
  add_symbol_options(witness, o);
  witness->add_option("--kind", o.kind, "psi-zero | omega-lower | omega-infinity | inv-psi-infinity")
      ->capture_default_str();
  add_threshold_options(witness, o);

  auto* orbit = app.add_subcommand("orbit", "orbit of a truncated operator (CSV)");
  add_symbol_options(orbit, o);
  orbit->add_option("--truncation", o.truncation, "matrix truncation order")->capture_default_str();
  orbit->add_option("--steps", o.steps, "iterations")->capture_default_str();
  orbit->add_option("--x0", o.x0, "e0 | random | criterion | @file")->capture_default_str();
  orbit->add_option("--seed", o.seed, "seed for random vectors and targets")->capture_default_str();
  orbit->add_option("--targets", o.targets, "number of random targets")->capture_default_str();
  orbit->add_option("--target-degree", o.target_degree, "degree of random targets")->capture_default_str();
  orbit->add_option("--gap", o.gap, "schedule spacing for --x0 criterion")->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadConfig;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string effective = sub->config_to_str(true, false);
    std::string content;
    if (classify->parsed()) content = cmd_classify(o, effective);
    if (image->parsed()) content = cmd_image(o, effective);
    if (products->parsed()) content = cmd_products(o, effective);
    if (witness->parsed()) content = cmd_witness(o, effective);
    if (orbit->parsed()) content = cmd_orbit(o, effective);
    write_output(o.out, content, out);
    return kOk;
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kBadConfig;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kBadConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace hardylab::cli
