#include "hardylab/report.hpp"

#include <cmath>

namespace hardylab {

using nlohmann::json;

namespace {

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json nums(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

}  // namespace

json to_json(cplx z) { return json::array({num(z.real()), num(z.imag())}); }

json to_json(const CoefficientFunction& f) {
  json a = json::array();
  for (const cplx& c : f.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const LambdaSpec& l) {
  static constexpr const char* forms[] = {"numeric", "gaussian-rational", "rational-rotation", "irrational-angle"};
  json j{{"text", l.text}, {"form", forms[static_cast<int>(l.form)]}, {"value", to_json(l.value)}};
  if (l.form == LambdaSpec::Form::RationalRotation) j["rotation"] = {l.p, l.q};
  if (l.form == LambdaSpec::Form::IrrationalAngle) j["turns"] = num(l.turns);
  if (l.form == LambdaSpec::Form::GaussianRational) {
    j["re"] = {l.re.num, l.re.den};
    j["im"] = {l.im.num, l.im.den};
  }
  return j;
}

json to_json(const SymbolSpec& s) {
  return {{"label", s.label},
          {"order", s.coeffs.order()},
          {"coefficients", to_json(s.coeffs)},
          {"polynomial", s.polynomial},
          {"exact_constant", s.exact_constant},
          {"tail_bound", num(s.tail_bound(1.0))}};
}

json to_json(const RotationClass& r) {
  json j{{"kind", to_string(r.kind)}, {"exact", r.exact}, {"tolerance", num(r.tolerance)}, {"lambda", to_json(r.lambda)}};
  if (r.kind == RotationKind::RootOfUnity) j["order"] = r.order;
  if (r.rotation) j["rotation"] = {r.rotation->first, r.rotation->second};
  if (r.angle_turns) j["angle_turns"] = num(*r.angle_turns);
  return j;
}

json to_json(const ZeroCount& z) {
  return {{"zeros", z.zeros},       {"radius", num(z.radius)},       {"samples", z.samples},
          {"min_modulus", num(z.min_modulus)}, {"lipschitz", num(z.lipschitz)}, {"certified", z.certified}};
}

json to_json(const ModulusExtrema& e) {
  return {{"sup_lower", num(e.sup_lower)},
          {"sup_grid_envelope", num(e.sup_grid_envelope)},
          {"inf_upper", num(e.inf_upper)},
          {"inf_grid_envelope", num(e.inf_grid_envelope)},
          {"sup_point", to_json(e.sup_point)},
          {"inf_point", to_json(e.inf_point)},
          {"grid", {e.radii, e.angles}},
          {"outer_radius", num(e.outer_radius)},
          {"zeros_inside", e.zeros_inside},
          {"near_boundary_zero", e.near_boundary_zero}};
}

json to_json(const PowerBoundReport& p) {
  return {{"sup", num(p.sup)},
          {"inf", num(p.inf)},
          {"bounded", p.bounded},
          {"inverse_bounded", p.inverse_bounded},
          {"sup_by_n", nums(p.sup_by_n)},
          {"inf_by_n", nums(p.inf_by_n)}};
}

json to_json(const WitnessThresholds& t) {
  return {{"tol_zero", num(t.tol_zero)},
          {"tol_inf", num(t.tol_inf)},
          {"window", t.window},
          {"bounded_below_floor", num(t.bounded_below_floor)}};
}

json to_json(const WitnessReport& w) {
  return {{"kind", to_string(w.kind)},
          {"witness_point", to_json(w.witness_point)},
          {"witness_index", w.witness_index},
          {"conclusion", to_string(w.conclusion)},
          {"satisfied", w.satisfied},
          {"bound_c", num(w.bound_c)},
          {"subsequence", w.subsequence},
          {"trajectory", nums(w.trajectory)},
          {"running_grid_max", nums(w.running_grid_max)},
          {"points_scanned", w.points_scanned},
          {"counts",
           {{"TendsToZero", w.count_to_zero},
            {"BoundedBelow", w.count_bounded_below},
            {"TendsToInfinity", w.count_to_infinity},
            {"Inconclusive", w.count_inconclusive}}},
          {"thresholds", to_json(w.thresholds)}};
}

json to_json(const OrbitBound& b) {
  return {{"kind", b.kind == OrbitBound::Kind::PowerBounded ? "PowerBounded" : "Geometric"},
          {"constant", num(b.constant)},
          {"rate", num(b.rate)},
          {"reason", b.reason}};
}

json to_json(const ClassifierConfig& c) {
  const auto& s = c.schedule;
  json sched{{"length", s.size()}, {"first", s.front()}, {"last", s.back()}};
  return {{"truncation", c.truncation},
          {"q_max", c.q_max},
          {"rotation_tol", num(c.rotation_tol)},
          {"zero_tol", num(c.zero_tol)},
          {"margin", num(c.margin)},
          {"grid", {c.grid_radii, c.grid_angles}},
          {"thresholds", to_json(c.thresholds)},
          {"schedule", sched},
          {"power_probe_n", c.power_probe_n},
          {"witness_grid",
           {{"radii", c.witness_grid.radii},
            {"angles", c.witness_grid.angles},
            {"max_radius", num(c.witness_grid.max_radius)},
            {"explicit_points", c.witness_grid.points.size()}}},
          {"zero_radius", num(c.zero_radius)}};
}

json to_json(const SufficientReport& s) {
  json f = json::array();
  for (const auto& x : s.firings) {
    f.push_back({{"rule", x.rule}, {"condition", x.condition == CriterionCondition::X0 ? "X0" : "Y0"},
                 {"certificate", x.certificate}});
  }
  return {{"X0", s.x0}, {"Y0", s.y0}, {"firings", f}, {"undetermined", s.undetermined}};
}

json verdict_report(const LambdaSpec& lambda, const SymbolSpec& phi, const Verdict& v, const ClassifierConfig& config) {
  json ev = json::object();
  if (v.extrema) ev["extrema"] = to_json(*v.extrema);
  if (v.relation) ev["circle_relation"] = to_string(*v.relation);
  if (v.zero_count) ev["zero_count"] = to_json(*v.zero_count);
  if (v.power_probe) ev["power_probe"] = to_json(*v.power_probe);
  if (!v.witnesses.empty()) {
    json w = json::array();
    for (const auto& r : v.witnesses) w.push_back(to_json(r));
    ev["witnesses"] = w;
  }
  ev["orbit_bound"] = to_json(v.bound);
  return {{"lambda", to_json(lambda)},
          {"phi", to_json(phi)},
          {"rotation_class", to_json(v.rotation)},
          {"dynamics", to_string(v.dynamics)},
          {"grade", to_string(v.grade)},
          {"rule", v.rule},
          {"hypercyclic", to_string(v.hypercyclic)},
          {"supercyclic", to_string(v.supercyclic)},
          {"supercyclic_grade", to_string(v.supercyclic_grade)},
          {"notes", v.notes},
          {"evidence", ev},
          {"config", to_json(config)}};
}

}  // namespace hardylab
