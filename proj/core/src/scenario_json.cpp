#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "plectic/expression.hpp"
#include "plectic/scenario.hpp"

namespace plectic {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) invalid(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) invalid(std::string(what) + " must be a string");
  return j.get<std::string>();
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) invalid(std::string(what) + " must be an integer");
  return j.get<int>();
}

Rational rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  invalid("rationals are written as integers or \"p/q\" strings");
}

Json rational_json(const Rational& q) { return to_string(q); }

std::vector<int> tuple(const Json& j, int dim) {
  if (!j.is_array()) invalid("basis tuples are arrays of 1-based indices");
  std::vector<int> out;
  for (const auto& x : j) {
    int i = integer(x, "basis index");
    if (i < 1 || i > dim) invalid("basis index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
    out.push_back(i - 1);
  }
  return out;
}

Json tuple_json(const std::vector<int>& t) {
  Json out = Json::array();
  for (int i : t) out.push_back(i + 1);
  return out;
}

Point point(const Json& j) {
  if (!j.is_array()) invalid("points are arrays of rationals");
  Point p;
  for (const auto& x : j) p.push_back(rational(x));
  return p;
}

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(rational_json(x));
  return out;
}

PolyForm form_of_degree(const std::string& src, const Chart& chart, int degree) {
  PolyForm f = parse_form(src, chart);
  if (f.is_zero()) return PolyForm(chart, degree);
  if (f.degree() != degree)
    throw Error(ErrorKind::DegreeError,
                "'" + src + "' has degree " + std::to_string(f.degree()) + ", expected " + std::to_string(degree));
  return f;
}

Matrix matrix(const Json& j) {
  if (!j.is_array()) invalid("matrices are arrays of rows");
  Matrix m;
  for (const auto& row : j) {
    if (!row.is_array()) invalid("matrix rows are arrays");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational(x));
    m.push_back(std::move(r));
  }
  return m;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(point_json(row));
  return out;
}

void require_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) invalid(where + " must be an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) invalid("unknown field '" + k + "' in " + where);
}

// --- algebra ---------------------------------------------------------------

LieAlgebra named_algebra(const std::string& name) {
  if (name == "su2") return su2_algebra();
  if (name == "heisenberg") return heisenberg_algebra();
  if (name == "solvable4") return solvable4_algebra();
  if (name.rfind("so", 0) == 0 && name.size() == 3 && name[2] >= '2' && name[2] <= '6') return so_algebra(name[2] - '0');
  if (name.rfind("abelian", 0) == 0 && name.size() > 7) return abelian_algebra(std::stoi(name.substr(7)));
  invalid("unknown builtin algebra '" + name + "'");
}

LieAlgebra algebra_from(const Json& j) {
  require_keys(j, {"builtin", "dim", "names", "brackets"}, "algebra");
  if (j.contains("builtin")) return named_algebra(text(j.at("builtin"), "algebra.builtin"));
  const int dim = integer(field(j, "dim"), "algebra.dim");
  std::vector<std::string> names;
  if (j.contains("names")) {
    for (const auto& n : j.at("names")) names.push_back(text(n, "algebra name"));
    if (static_cast<int>(names.size()) != dim) invalid("algebra.names must have dim entries");
  } else {
    for (int i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  }
  std::vector<BracketEntry> entries;
  if (j.contains("brackets"))
    for (const auto& b : j.at("brackets")) {
      if (!b.is_array() || b.size() != 3) invalid("brackets are [i, j, [coefficients]]");
      auto ij = tuple(Json::array({b[0], b[1]}), dim);
      LieVector v;
      for (const auto& x : b[2]) v.push_back(rational(x));
      if (static_cast<int>(v.size()) != dim) invalid("bracket coefficient vectors have dim entries");
      entries.push_back({ij[0], ij[1], v});
    }
  return LieAlgebra(names, entries);
}

Json algebra_json(const LieAlgebra& g) {
  Json names = Json::array();
  for (const auto& n : g.names()) names.push_back(n);
  Json brackets = Json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      const LieVector& v = g.bracket_basis(i, j);
      if (is_zero(v)) continue;
      brackets.push_back(Json::array({i + 1, j + 1, point_json(v)}));
    }
  return Json{{"dim", g.dim()}, {"names", names}, {"brackets", brackets}};
}

// --- geometry --------------------------------------------------------------

Domain domain_from(const Json& j, Chart& chart) {
  require_keys(j, {"type", "coordinates", "constraint", "points", "samples"}, "manifold");
  std::vector<std::string> coords;
  for (const auto& c : field(j, "coordinates")) coords.push_back(text(c, "coordinate"));
  chart = Chart(coords);
  const std::string type = text(field(j, "type"), "manifold.type");
  if (type == "chart") return Domain::chart(chart);
  if (type != "levelset") invalid("manifold.type must be \"chart\" or \"levelset\"");
  MultiPoly constraint = parse_polynomial(text(field(j, "constraint"), "manifold.constraint"), chart);
  std::vector<Point> pts;
  if (j.contains("points")) {
    for (const auto& p : j.at("points")) pts.push_back(point(p));
  } else {
    if (!(constraint == unit_sphere_constraint(chart.size())))
      invalid("manifold.samples is only available for the unit sphere; list points instead");
    pts = sphere_points(chart.size(), integer(field(j, "samples"), "manifold.samples"));
  }
  return Domain::level_set(make_level_set(chart, constraint, pts));
}

Json domain_json(const Domain& d) {
  Json coords = Json::array();
  for (const auto& n : d.chart().names()) coords.push_back(n);
  if (!d.is_level_set()) return Json{{"type", "chart"}, {"coordinates", coords}};
  const LevelSetChart& ls = *d.level();
  Json pts = Json::array();
  for (const auto& p : ls.sample_points) pts.push_back(point_json(p));
  return Json{{"type", "levelset"},
              {"coordinates", coords},
              {"constraint", to_string(ls.constraint, ls.ambient)},
              {"points", pts}};
}

ActionData action_from(const Json& j, const LieAlgebra& g, const Chart& chart, std::optional<std::vector<Matrix>>& mats) {
  require_keys(j, {"type", "matrices", "fields"}, "action");
  const std::string type = text(field(j, "type"), "action.type");
  if (type == "linear") {
    std::vector<Matrix> ms;
    for (const auto& m : field(j, "matrices")) ms.push_back(matrix(m));
    if (static_cast<int>(ms.size()) != g.dim()) invalid("one matrix per basis element is required");
    mats = ms;
    return fundamental_fields_linear(LinearAction(g, ms), chart);
  }
  if (type != "fields") invalid("action.type must be \"linear\" or \"fields\"");
  std::vector<PolyMultiVec> fields;
  for (const auto& f : field(j, "fields")) fields.push_back(parse_field(text(f, "field"), chart));
  if (static_cast<int>(fields.size()) != g.dim()) invalid("one field per basis element is required");
  return ActionData(g, chart, std::move(fields));
}

Json action_json(const Geometry& geo) {
  if (geo.matrices) {
    Json ms = Json::array();
    for (const auto& m : *geo.matrices) ms.push_back(matrix_json(m));
    return Json{{"type", "linear"}, {"matrices", ms}};
  }
  Json fs = Json::array();
  for (const auto& v : geo.action.fields()) fs.push_back(to_string(v));
  return Json{{"type", "fields"}, {"fields", fs}};
}

// --- tables ----------------------------------------------------------------

Json entries_json(const std::vector<std::pair<std::vector<int>, std::string>>& entries, const char* key) {
  Json out = Json::array();
  for (const auto& [t, v] : entries) out.push_back(Json{{"at", tuple_json(t)}, {key, v}});
  return out;
}

CartanCochain cartan_from(const Json& j, const Geometry& geo, int dim) {
  require_keys(j, {"steps"}, "cartan");
  CartanCochain c;
  c.omega = geo.omega;
  int expected = 1;
  for (const auto& step : field(j, "steps")) {
    require_keys(step, {"degree", "values"}, "cartan step");
    const int i = integer(field(step, "degree"), "cartan step degree");
    if (i != expected++) invalid("cartan steps must be listed in order 1, 2, ...");
    const int deg = geo.omega.degree() - 2 * i;
    if (deg < 0) invalid("cartan step " + std::to_string(i) + " has negative form degree");
    FormSymTensor p = empty_step(dim, i, geo.omega.chart(), deg);
    for (const auto& e : field(step, "values")) {
      auto t = tuple(field(e, "at"), dim);
      if (static_cast<int>(t.size()) != i) invalid("cartan step keys have arity equal to the degree");
      p.set(t, form_of_degree(text(field(e, "form"), "form"), geo.omega.chart(), deg));
    }
    c.steps.push_back(std::move(p));
  }
  return c;
}

Json cartan_json(const CartanCochain& c) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    std::vector<std::pair<std::vector<int>, std::string>> entries;
    for (const auto& [idx, v] : c.steps[i].values()) entries.emplace_back(idx, to_string(v));
    steps.push_back(Json{{"degree", static_cast<int>(i + 1)}, {"values", entries_json(entries, "form")}});
  }
  return Json{{"steps", steps}};
}

std::vector<FormCochain> moment_from(const Json& j, const Geometry& geo, int dim) {
  require_keys(j, {"components"}, "moment");
  const int n = geo.omega.degree() - 1;
  std::vector<FormCochain> f;
  for (int k = 1; k <= n; ++k) f.emplace_back(dim, k, PolyForm(geo.omega.chart(), n - k));
  for (const auto& comp : field(j, "components")) {
    require_keys(comp, {"k", "values"}, "moment component");
    const int k = integer(field(comp, "k"), "moment component k");
    if (k < 1 || k > n) invalid("moment component k must lie in 1.." + std::to_string(n));
    for (const auto& e : field(comp, "values")) {
      auto t = tuple(field(e, "at"), dim);
      if (static_cast<int>(t.size()) != k) invalid("moment keys have arity k");
      std::vector<int> sorted = t;
      const int sign = sort_sign(sorted);
      if (sign == 0) invalid("moment keys must not repeat a basis element");
      PolyForm v = form_of_degree(text(field(e, "form"), "form"), geo.omega.chart(), n - k);
      f[k - 1].set(make_index_set(sorted), Rational(sign) * v);
    }
  }
  return f;
}

Json moment_json(const std::vector<FormCochain>& f) {
  Json comps = Json::array();
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::vector<std::pair<std::vector<int>, std::string>> entries;
    for (const auto& [s, v] : f[k].values()) entries.emplace_back(indices_of(s), to_string(v));
    comps.push_back(Json{{"k", static_cast<int>(k + 1)}, {"values", entries_json(entries, "form")}});
  }
  return Json{{"components", comps}};
}

ScalarCochain cocycle_from(const Json& j, int dim, int degree) {
  ScalarCochain c(dim, degree, Rational(0));
  for (const auto& e : j) {
    auto t = tuple(field(e, "at"), dim);
    if (static_cast<int>(t.size()) != degree) invalid("cocycle keys have arity " + std::to_string(degree));
    const int sign = sort_sign(t);
    if (sign == 0) invalid("cocycle keys must not repeat a basis element");
    c.set(make_index_set(t), Rational(sign) * rational(field(e, "value")));
  }
  return c;
}

Json cocycle_json(const ScalarCochain& c) {
  Json out = Json::array();
  for (const auto& [s, v] : c.values()) out.push_back(Json{{"at", tuple_json(indices_of(s))}, {"value", rational_json(v)}});
  return out;
}

std::vector<int> int_list(const Json& j) {
  std::vector<int> out;
  for (const auto& x : j) out.push_back(integer(x, "degree"));
  return out;
}

Scenario scenario_from(const Json& j) {
  require_keys(j,
               {"name", "summary", "algebra", "action", "manifold", "omega", "cartan", "moment", "phi", "primitive",
                "base_points", "expect", "central", "traces", "properties", "checks"},
               "scenario");
  Scenario s;
  s.name = text(field(j, "name"), "name");
  if (j.contains("summary")) s.summary = text(j.at("summary"), "summary");
  s.algebra = algebra_from(field(j, "algebra"));
  const int dim = s.algebra.dim();
  if (j.contains("manifold") || j.contains("action") || j.contains("omega")) {
    Geometry geo;
    Chart chart;
    geo.domain = domain_from(field(j, "manifold"), chart);
    geo.action = action_from(field(j, "action"), s.algebra, chart, geo.matrices);
    geo.omega = parse_form(text(field(j, "omega"), "omega"), chart);
    s.geometry = std::move(geo);
  }
  auto need_geometry = [&](const char* what) -> const Geometry& {
    if (!s.geometry) invalid(std::string(what) + " needs manifold, action and omega");
    return *s.geometry;
  };
  if (j.contains("cartan")) s.cartan = cartan_from(j.at("cartan"), need_geometry("cartan"), dim);
  if (j.contains("moment")) s.moment = moment_from(j.at("moment"), need_geometry("moment"), dim);
  if (j.contains("phi")) {
    const Geometry& geo = need_geometry("phi");
    std::vector<PolyForm> phi;
    for (const auto& f : j.at("phi")) phi.push_back(form_of_degree(text(f, "phi"), geo.omega.chart(), geo.omega.degree() - 2));
    if (static_cast<int>(phi.size()) != dim) invalid("phi needs one form per basis element");
    s.phi = std::move(phi);
  }
  if (j.contains("primitive")) {
    const Geometry& geo = need_geometry("primitive");
    const Json& p = j.at("primitive");
    require_keys(p, {"form", "invariants"}, "primitive");
    s.primitive = form_of_degree(text(field(p, "form"), "primitive.form"), geo.omega.chart(), geo.omega.degree() - 1);
    if (p.contains("invariants"))
      for (const auto& f : p.at("invariants")) s.invariants.push_back(parse_polynomial(text(f, "invariant"), geo.omega.chart()));
  }
  if (j.contains("base_points"))
    for (const auto& p : j.at("base_points")) s.base_points.push_back(point(p));
  if (j.contains("expect")) {
    const Json& e = j.at("expect");
    require_keys(e, {"values", "obstruction", "extension_fails_at"}, "expect");
    if (e.contains("values")) {
      const Geometry& geo = need_geometry("expect.values");
      const int n = geo.omega.degree() - 1;
      for (const auto& v : e.at("values")) {
        const int k = integer(field(v, "k"), "expected k");
        if (k < 1 || k > n) invalid("expected k must lie in 1.." + std::to_string(n));
        auto t = tuple(field(v, "at"), dim);
        if (static_cast<int>(t.size()) != k) invalid("expected keys have arity k");
        s.expected.push_back({k, t, form_of_degree(text(field(v, "form"), "form"), geo.omega.chart(), n - k)});
      }
    }
    if (e.contains("obstruction")) {
      const Json& o = e.at("obstruction");
      require_keys(o, {"trivial", "cocycle"}, "expect.obstruction");
      ObstructionExpectation ob;
      ob.trivial = field(o, "trivial").get<bool>();
      if (o.contains("cocycle"))
        for (const auto& c : o.at("cocycle")) ob.cocycle.push_back({tuple(field(c, "at"), dim), rational(field(c, "value"))});
      s.obstruction = ob;
    }
    if (e.contains("extension_fails_at")) s.extension_fails_at = text(e.at("extension_fails_at"), "extension_fails_at");
  }
  if (j.contains("central")) {
    const Json& c = j.at("central");
    require_keys(c, {"n", "cocycle", "nontrivial"}, "central");
    CentralData d;
    d.n = integer(field(c, "n"), "central.n");
    d.cocycle = cocycle_from(field(c, "cocycle"), dim, d.n + 1);
    if (c.contains("nontrivial")) d.nontrivial = c.at("nontrivial").get<bool>();
    s.central = d;
  }
  if (j.contains("traces")) {
    const Json& t = j.at("traces");
    require_keys(t, {"n", "zero", "nondegenerate", "degenerate", "values"}, "traces");
    TraceSpec traces;
    traces.n = integer(field(t, "n"), "traces.n");
    if (t.contains("zero")) traces.zero = int_list(t.at("zero"));
    if (t.contains("nondegenerate")) traces.nondegenerate = int_list(t.at("nondegenerate"));
    if (t.contains("degenerate")) traces.degenerate = int_list(t.at("degenerate"));
    const int sdim = traces.n * traces.n - 1;
    if (t.contains("values"))
      for (const auto& v : t.at("values")) {
        TraceValue tv{integer(field(v, "k"), "trace k"), tuple(field(v, "at"), sdim), rational(field(v, "value"))};
        if (static_cast<int>(tv.tuple.size()) != tv.k) invalid("trace keys have arity k");
        traces.values.push_back(std::move(tv));
      }
    s.traces = traces;
  }
  if (j.contains("properties")) {
    const Json& p = j.at("properties");
    require_keys(p, {"names", "instances"}, "properties");
    for (const auto& n : field(p, "names")) s.properties.push_back(text(n, "property name"));
    if (p.contains("instances")) s.property_instances = integer(p.at("instances"), "properties.instances");
  }
  for (const auto& c : field(j, "checks")) {
    std::string name = text(c, "check name");
    const auto& known = check_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) invalid("unknown check '" + name + "'");
    s.checks.push_back(std::move(name));
  }
  return s;
}

}  // namespace

Scenario scenario_from_json(const std::string& src) {
  Json j;
  try {
    j = Json::parse(src);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
  try {
    return scenario_from(j);
  } catch (const Json::exception& e) {
    invalid(e.what());
  }
}

std::string scenario_to_json(const Scenario& s) {
  Json j;
  j["name"] = s.name;
  if (!s.summary.empty()) j["summary"] = s.summary;
  j["algebra"] = algebra_json(s.algebra);
  if (s.geometry) {
    j["manifold"] = domain_json(s.geometry->domain);
    j["action"] = action_json(*s.geometry);
    j["omega"] = to_string(s.geometry->omega);
  }
  if (s.cartan) j["cartan"] = cartan_json(*s.cartan);
  if (s.moment) j["moment"] = moment_json(*s.moment);
  if (s.phi) {
    Json phi = Json::array();
    for (const auto& f : *s.phi) phi.push_back(to_string(f));
    j["phi"] = phi;
  }
  if (s.primitive) {
    Json inv = Json::array();
    for (const auto& p : s.invariants) inv.push_back(to_string(p, s.primitive->chart()));
    j["primitive"] = Json{{"form", to_string(*s.primitive)}, {"invariants", inv}};
  }
  if (!s.base_points.empty()) {
    Json pts = Json::array();
    for (const auto& p : s.base_points) pts.push_back(point_json(p));
    j["base_points"] = pts;
  }
  Json expect = Json::object();
  if (!s.expected.empty()) {
    Json vals = Json::array();
    for (const auto& e : s.expected) vals.push_back(Json{{"k", e.k}, {"at", tuple_json(e.tuple)}, {"form", to_string(e.value)}});
    expect["values"] = vals;
  }
  if (s.obstruction) {
    Json ob{{"trivial", s.obstruction->trivial}};
    if (!s.obstruction->cocycle.empty()) {
      Json cs = Json::array();
      for (const auto& c : s.obstruction->cocycle) cs.push_back(Json{{"at", tuple_json(c.tuple)}, {"value", rational_json(c.value)}});
      ob["cocycle"] = cs;
    }
    expect["obstruction"] = ob;
  }
  if (s.extension_fails_at) expect["extension_fails_at"] = *s.extension_fails_at;
  if (!expect.empty()) j["expect"] = expect;
  if (s.central)
    j["central"] = Json{{"n", s.central->n}, {"cocycle", cocycle_json(s.central->cocycle)}, {"nontrivial", s.central->nontrivial}};
  if (s.traces) {
    const TraceSpec& t = *s.traces;
    Json vals = Json::array();
    for (const auto& v : t.values) vals.push_back(Json{{"k", v.k}, {"at", tuple_json(v.tuple)}, {"value", rational_json(v.value)}});
    j["traces"] = Json{{"n", t.n}, {"zero", t.zero}, {"nondegenerate", t.nondegenerate}, {"degenerate", t.degenerate}, {"values", vals}};
  }
  if (!s.properties.empty()) j["properties"] = Json{{"names", s.properties}, {"instances", s.property_instances}};
  j["checks"] = s.checks;
  return j.dump(2) + "\n";
}

std::string report_json(const std::vector<ScenarioReport>& reports, bool timing) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json e{{"name", c.name}, {"status", c.ok ? "pass" : "fail"}};
      if (!c.ok) e["witness"] = c.witness;
      if (!c.detail.empty()) e["detail"] = c.detail;
      e["millis"] = timing ? std::round(c.millis * 1000) / 1000 : 0.0;
      checks.push_back(std::move(e));
    }
    Json entry{{"scenario", r.scenario}, {"status", r.ok() ? "pass" : "fail"}, {"checks", checks}};
    if (!r.flags.empty()) entry["flags"] = r.flags;
    out.push_back(std::move(entry));
  }
  return out.dump(2) + "\n";
}

}  // namespace plectic
