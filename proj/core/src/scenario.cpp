#include "plectic/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

#include "plectic/coalgebra.hpp"
#include "plectic/expression.hpp"
#include "plectic/invariant_poly.hpp"
#include "plectic/properties.hpp"
#include "plectic/samplers.hpp"

namespace plectic {

namespace {

const Geometry& geometry_of(const Scenario& s) {
  if (!s.geometry) throw Error(ErrorKind::InvalidInput, "scenario has no action or closed form");
  return *s.geometry;
}

void fail(CheckOutcome& out, const std::string& witness) {
  if (!out.ok) return;
  out.ok = false;
  out.witness = witness;
}

void absorb(CheckOutcome& out, const CheckReport& rep) {
  if (const Verdict* bad = rep.first_failure()) fail(out, bad->name + ": " + bad->witness);
}

std::uint64_t name_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) h = (h ^ ch) * 1099511628211ull;
  return h;
}

std::string domain_label(const Domain& d) {
  if (d.is_level_set()) return std::to_string(d.level()->sample_points.size()) + " sample points with full frames";
  return "exact polynomial identities";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::string tuple_label(const LieAlgebra& g, const std::vector<int>& t) { return format_tuple(g.names(), t); }

std::vector<PolyForm> phi_of(const Scenario& s) {
  if (s.phi) return *s.phi;
  if (s.cartan) return mu_of(*s.cartan);
  if (s.moment && !s.moment->empty()) {
    std::vector<PolyForm> mu;
    for (int i = 0; i < s.algebra.dim(); ++i) mu.push_back((*s.moment)[0].at(make_index_set(std::vector<int>{i})));
    return mu;
  }
  throw Error(ErrorKind::InvalidInput, "scenario has no candidate f_1");
}

std::optional<std::string> moment_difference(const MomentMap& a, const MomentMap& b, const Domain& domain) {
  const auto& g = a.action.algebra();
  for (int k = 1; k <= a.n(); ++k)
    for (const auto& tuple : increasing_subsets(g.dim(), k))
      if (auto d = domain.form_difference(a.component(k).at(tuple), b.component(k).at(tuple)))
        return "f_" + std::to_string(k) + tuple_label(g, tuple) + ": " + *d;
  return std::nullopt;
}

// --- checks ---------------------------------------------------------------

void run_jacobi(const Scenario& s, CheckOutcome& out) {
  const LieAlgebra& g = s.algebra;
  absorb(out, check_generalized_jacobi(lie_as_linfty(g), 3));
  if (!s.central) {
    out.detail = "Lie algebra of dimension " + std::to_string(g.dim()) + " through arity 3";
    return;
  }
  const CentralData& c = *s.central;
  BracketTable t = central_extension(g, c.cocycle, c.n);
  absorb(out, check_generalized_jacobi(t, c.n + 2));
  if (auto bad = t.property_p_violation()) fail(out, "property (P) fails");
  const bool nontrivial = !is_ce_coboundary(g, c.cocycle).has_value();
  if (nontrivial != c.nontrivial)
    fail(out, std::string("cocycle class is ") + (nontrivial ? "NonTrivial" : "Trivial") + ", expected otherwise");
  out.detail = "central " + std::to_string(c.n) + "-extension through arity " + std::to_string(c.n + 2) +
               "; cocycle class " + (nontrivial ? "NonTrivial" : "Trivial");
}

CartanCochain extension_candidate(const Scenario& s) {
  if (s.cartan) return *s.cartan;
  return one_step(geometry_of(s).omega, phi_of(s), s.algebra.dim());
}

void run_extension(const Scenario& s, CheckOutcome& out) {
  const Geometry& geo = geometry_of(s);
  CartanCochain c = extension_candidate(s);
  CheckReport rep = check_extension(c, geo.action, geo.domain);
  if (!s.extension_fails_at) {
    absorb(out, rep);
    std::vector<std::string> names;
    for (const auto& v : rep.items) names.push_back(v.name);
    out.detail = join(names, ", ") + " on " + domain_label(geo.domain);
    return;
  }
  const Verdict* bad = rep.first_failure();
  if (!bad) return fail(out, "expected a failure at " + *s.extension_fails_at + " but every condition holds");
  if (bad->name != *s.extension_fails_at)
    return fail(out, "first failure at " + bad->name + " instead of " + *s.extension_fails_at + ": " + bad->witness);
  out.detail = "fails at " + bad->name + " as expected (" + bad->witness + ")";
  if (c.steps.size() == 1) {
    auto mu = mu_of(c);
    for (int i = 0; i < s.algebra.dim(); ++i) {
      PolyForm v = interior(geo.action.field(i), mu[i]);
      if (geo.domain.form_is_zero(v)) continue;
      const std::string& x = s.algebra.name(i);
      out.detail += "; iota_{v_" + x + "} f_1(" + x + ") = " + to_string(v);
      break;
    }
  }
}

void run_verify_moment(const Scenario& s, CheckOutcome& out, std::vector<std::string>& flags) {
  const Geometry& geo = geometry_of(s);
  MomentMap m = scenario_moment(s);
  CheckReport rep = verify_moment(m, geo.domain);
  absorb(out, rep);
  if (auto bad = equivariance_violation(m, geo.domain)) fail(out, "equivariance: " + *bad);
  if (m.n() == 2) absorb(out, two_plectic_conditions(m, geo.domain));
  for (const Point& p : s.base_points) {
    auto ob = obstruction(geo.action, geo.omega, p, geo.domain);
    if (!(ce_differential(s.algebra, moment_primitive(m, p)) == ob.cocycle))
      fail(out, "delta b != c_p at " + to_string(p));
  }
  out.detail = "n = " + std::to_string(m.n()) + ", " + std::to_string(rep.items.size()) +
               " structure conditions, equivariance";
  if (!s.base_points.empty())
    out.detail += ", delta b = c_p at " + std::to_string(s.base_points.size()) + " base points";
  out.detail += " on " + domain_label(geo.domain);
  if (s.moment) {
    CheckReport ext = check_extension(extension_candidate(s), geo.action, geo.domain);
    if (!ext.ok()) {
      flags.push_back("NonCocycleMomentMap");
      out.detail += "; f_1 does not come from a Cartan cocycle";
    }
  }
}

void run_expected_values(const Scenario& s, CheckOutcome& out) {
  const Geometry& geo = geometry_of(s);
  MomentMap m = scenario_moment(s);
  std::vector<std::string> shown;
  for (const auto& e : s.expected) {
    if (e.k < 1 || e.k > m.n()) return fail(out, "no component f_" + std::to_string(e.k));
    PolyForm v = m.component(e.k).on_basis(e.tuple);
    std::string label = "f_" + std::to_string(e.k) + tuple_label(s.algebra, e.tuple);
    if (auto d = geo.domain.form_difference(v, e.value))
      return fail(out, label + " = " + to_string(v) + ", expected " + to_string(e.value) + " (" + *d + ")");
    shown.push_back(label + " = " + to_string(v));
  }
  if (shown.empty()) return fail(out, "no expected values recorded");
  out.detail = shown.size() <= 2 ? join(shown, "; ")
                                 : std::to_string(shown.size()) + " values match on " + domain_label(geo.domain);
}

void run_build_from_cartan(const Scenario& s, CheckOutcome& out) {
  const Geometry& geo = geometry_of(s);
  if (!s.cartan) return fail(out, "scenario has no Cartan cocycle");
  MomentMap m = moment_from_cartan(*s.cartan, geo.action, geo.domain);
  absorb(out, verify_moment(m, geo.domain));
  out.detail = "f_1..f_" + std::to_string(m.n()) + " from a " + std::to_string(s.cartan->steps.size()) +
               "-step extension pass verify_moment";
  if (s.cartan->steps.size() == 1) {
    MomentMap e = moment_from_extension(*s.cartan, geo.action, geo.domain);
    if (auto d = moment_difference(m, e, geo.domain)) fail(out, "Cartan formula and extension formula differ at " + *d);
    out.detail += " and agree with the extension formula";
  }
}

CartanCochain scaled(const CartanCochain& c, const Rational& k) {
  CartanCochain out;
  out.omega = k * c.omega;
  for (const auto& step : c.steps) {
    FormSymTensor p(step.dim(), step.degree(), step.zero());
    for (const auto& [idx, v] : step.values()) p.set(idx, k * v);
    out.steps.push_back(std::move(p));
  }
  return out;
}

Rational nonzero_rational(Rng& rng) {
  Rational r = rng.rational();
  return is_zero(r) ? Rational(1) : r;
}

void run_build_from_extension(const Scenario& s, CheckOutcome& out, const RunOptions& opt) {
  const Geometry& geo = geometry_of(s);
  const bool from_primitive = s.primitive.has_value();
  if (!from_primitive && !(s.cartan && s.cartan->steps.size() == 1))
    return fail(out, "needs an invariant primitive or a 1-step extension");
  Rng rng(opt.seed ^ name_hash(s.name + "/build-from-extension"));
  const int nvars = geo.action.chart().size();
  for (int t = 0; t < opt.random_instances; ++t) {
    CartanCochain ext;
    if (from_primitive) {
      MultiPoly p = MultiPoly::constant(nvars, nonzero_rational(rng));
      for (const auto& inv : s.invariants) {
        p += rng.rational() * inv;
        if (rng.coin()) p += rng.rational() * inv * inv;
      }
      ext = extension_from_exact(p * *s.primitive, geo.action, geo.domain);
    } else {
      ext = scaled(*s.cartan, nonzero_rational(rng));
    }
    MomentMap me = moment_from_extension(ext, geo.action, geo.domain);
    MomentMap mc = moment_from_cartan(ext, geo.action, geo.domain);
    if (auto d = moment_difference(mc, me, geo.domain))
      return fail(out, "instance " + std::to_string(t) + ": " + *d);
    CheckReport rep = verify_moment(me, geo.domain);
    if (!rep.ok()) return absorb(out, rep);
  }
  out.detail = std::to_string(opt.random_instances) + " random 1-step extensions (" +
               (from_primitive ? "invariant primitive times a random invariant polynomial"
                               : "random rescalings of the given extension") +
               "): Cartan and extension formulas agree componentwise";
}

void run_obstruction(const Scenario& s, CheckOutcome& out) {
  const Geometry& geo = geometry_of(s);
  if (s.base_points.size() < 3) return fail(out, "needs at least 3 base points");
  std::vector<bool> verdicts;
  std::string first;
  for (const Point& p : s.base_points) {
    auto ob = obstruction(geo.action, geo.omega, p, geo.domain);
    verdicts.push_back(ob.trivial());
    if (first.empty()) first = to_string(ob.cocycle, s.algebra);
    if (s.obstruction) {
      if (ob.trivial() != s.obstruction->trivial)
        return fail(out, std::string("class is ") + (ob.trivial() ? "Trivial" : "NonTrivial") + " at " + to_string(p));
      for (const auto& e : s.obstruction->cocycle) {
        Rational v = ob.cocycle.on_basis(e.tuple);
        if (v != e.value)
          return fail(out, "c_p" + tuple_label(s.algebra, e.tuple) + " = " + to_string(v) + ", expected " +
                               to_string(e.value) + " at " + to_string(p));
      }
    }
  }
  if (std::adjacent_find(verdicts.begin(), verdicts.end(), std::not_equal_to<>()) != verdicts.end())
    return fail(out, "triviality verdict depends on the base point");
  out.detail = "c_p = " + first + "; " + (verdicts[0] ? "Trivial" : "NonTrivial") + " at all " +
               std::to_string(verdicts.size()) + " base points";
}

void run_unobstructed(const Scenario& s, CheckOutcome& out) {
  const Geometry& geo = geometry_of(s);
  if (geo.domain.is_level_set()) return fail(out, "the construction needs a star-shaped chart");
  if (s.base_points.empty()) return fail(out, "needs a base point");
  const bool expect_obstructed = s.obstruction && !s.obstruction->trivial;
  try {
    MomentMap m = construct_unobstructed(geo.action, geo.omega, phi_of(s), s.base_points[0]);
    if (expect_obstructed) return fail(out, "constructed a moment map despite a nontrivial class");
    absorb(out, verify_moment(m, geo.domain));
    out.detail = "f_1..f_" + std::to_string(m.n()) + " constructed at " + to_string(s.base_points[0]) +
                 " pass verify_moment";
  } catch (const Error& e) {
    if (!expect_obstructed || e.kind() != ErrorKind::Obstructed) throw;
    out.detail = std::string("refused as expected: ") + e.what();
  }
}

void run_extension_lift(const Scenario& s, CheckOutcome& out) {
  const Geometry& geo = geometry_of(s);
  if (s.base_points.empty()) return fail(out, "needs a base point");
  auto lift = extension_lift(geo.action, geo.omega, phi_of(s), s.base_points[0]);
  absorb(out, check_extension_lift(lift));
  out.detail = "lift through the central extension by c_p = " + to_string(lift.obstruction.cocycle, s.algebra);
}

void run_coalgebra(const Scenario& s, CheckOutcome& out, const RunOptions& opt) {
  const LieAlgebra& g = s.algebra;
  const int n = s.central ? s.central->n : 1;
  ScalarCochain c = s.central ? s.central->cocycle : ScalarCochain(g.dim(), 2, Rational(0));
  BracketTable source = central_extension(g, c, n);
  const bool square = !square_violation(Codifferential(source), n + 2);
  const bool jacobi = check_generalized_jacobi(source, n + 2).ok();
  if (square != jacobi) fail(out, "Q^2 = 0 and the Jacobi identities disagree");
  if (!square) fail(out, "Q^2 != 0");

  Rng rng(opt.seed ^ name_hash(s.name + "/coalgebra-crosscheck"));
  ScalarCochain b = random_cochain(g.dim(), n, rng);
  ScalarCochain c2 = c;
  const ScalarCochain db = ce_differential(g, b);
  for (const auto& [key, v] : db.values()) c2.add(key, Rational(1), v);
  BracketTable target = central_extension(g, c2, n);
  auto both = [&](const TableMorphism& m) {
    const bool direct = check_ext_morphism(g, c, target, m).ok();
    auto f = coalgebra_map(source.space(), m, target.space());
    const bool chain = check_chain_map(f, Codifferential(source), Codifferential(target), n + 2).ok();
    return std::make_pair(direct, chain);
  };
  TableMorphism m = cocycle_quasi_iso(g, c, c2, b, n);
  auto [direct, chain] = both(m);
  if (direct != chain) fail(out, "component equations and FQ = Q'F disagree on the quasi-isomorphism");
  if (!direct) fail(out, "quasi-isomorphism to c + delta b fails");

  TableMorphism bad = m;
  if (!c.is_zero() && bad.central) {
    for (auto& v : *bad.central) v *= 2;
  } else {
    IndexSet key = make_index_set(std::vector<int>{0});
    Element v = bad.f[0].at(key);
    for (auto& x : v) x *= 2;
    bad.f[0].set(key, v);
  }
  auto [bad_direct, bad_chain] = both(bad);
  if (bad_direct != bad_chain) fail(out, "component equations and FQ = Q'F disagree on the injected change");
  out.detail = "Q^2 = 0 through length " + std::to_string(n + 2) +
               "; quasi-isomorphism to c + delta b passes both formulations; injected change " +
               (bad_direct ? "is still a morphism on both sides" : "caught by both sides");
}

void run_traces(const Scenario& s, CheckOutcome& out) {
  if (!s.traces) return fail(out, "scenario has no trace data");
  const TraceSpec& t = *s.traces;
  LieAlgebra g = su_algebra(t.n);
  std::set<int> degrees(t.zero.begin(), t.zero.end());
  degrees.insert(t.nondegenerate.begin(), t.nondegenerate.end());
  degrees.insert(t.degenerate.begin(), t.degenerate.end());
  for (const auto& v : t.values) degrees.insert(v.k);
  std::map<int, SymmetricForm> q;
  for (int k : degrees) {
    q[k] = symtrace_poly(t.n, k);
    if (auto bad = invariance_violation(q[k], g))
      return fail(out, "q_" + std::to_string(k) + " not invariant at " + tuple_label(g, *bad));
  }
  auto list = [](const std::vector<int>& ks) {
    std::vector<std::string> parts;
    for (int k : ks) parts.push_back("q_" + std::to_string(k));
    return join(parts, ", ");
  };
  for (int k : t.zero)
    if (!q[k].is_zero()) return fail(out, "q_" + std::to_string(k) + " is not identically zero");
  for (int k : t.nondegenerate)
    if (!is_nondegenerate(q[k])) return fail(out, "q_" + std::to_string(k) + " is degenerate");
  for (int k : t.degenerate)
    if (is_nondegenerate(q[k])) return fail(out, "q_" + std::to_string(k) + " is nondegenerate");
  for (const auto& v : t.values) {
    Rational got = q[v.k].at(v.tuple);
    if (got != v.value)
      return fail(out, "q_" + std::to_string(v.k) + tuple_label(g, v.tuple) + " = " + to_string(got) + ", expected " +
                           to_string(v.value));
  }
  std::vector<std::string> parts;
  if (!t.zero.empty()) parts.push_back(list(t.zero) + " = 0");
  if (!t.nondegenerate.empty()) parts.push_back(list(t.nondegenerate) + " nondegenerate");
  if (!t.degenerate.empty()) parts.push_back(list(t.degenerate) + " degenerate");
  parts.push_back(std::to_string(t.values.size()) + " table values match");
  out.detail = "su(" + std::to_string(t.n) + "): " + join(parts, "; ");
}

void run_properties_check(const Scenario& s, CheckOutcome& out, const RunOptions& opt) {
  if (s.properties.empty()) return fail(out, "no properties listed");
  auto results = run_properties(s.properties, opt.seed, s.property_instances);
  int failures = 0;
  for (const auto& r : results) {
    failures += r.failures;
    if (!r.ok()) fail(out, r.name + ": " + std::to_string(r.failures) + " failures, first " + r.first_witness);
  }
  out.detail = std::to_string(results.size()) + " properties x " + std::to_string(s.property_instances) +
               " instances, " + std::to_string(failures) + " failures";
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "jacobi",      "extension",  "verify-moment", "expected-values", "build-from-cartan", "build-from-extension",
      "obstruction", "unobstructed-construct", "extension-lift", "coalgebra-crosscheck", "properties", "traces"};
  return names;
}

MomentMap scenario_moment(const Scenario& s) {
  const Geometry& geo = geometry_of(s);
  if (s.moment) {
    MomentMap m = zero_moment(geo.action, geo.omega);
    if (s.moment->size() != m.f.size())
      throw Error(ErrorKind::SizeMismatch, "expected " + std::to_string(m.f.size()) + " moment components");
    m.f = *s.moment;
    return m;
  }
  if (s.cartan) return moment_from_cartan(*s.cartan, geo.action, geo.domain);
  if (s.phi && !s.base_points.empty() && !geo.domain.is_level_set())
    return construct_unobstructed(geo.action, geo.omega, *s.phi, s.base_points[0]);
  throw Error(ErrorKind::InvalidInput, "scenario has no moment data");
}

ScenarioReport run_scenario(const Scenario& s, const RunOptions& options) {
  using Clock = std::chrono::steady_clock;
  ScenarioReport report;
  report.scenario = s.name;
  for (const auto& name : s.checks) {
    CheckOutcome out;
    out.name = name;
    auto start = Clock::now();
    try {
      if (name == "jacobi") run_jacobi(s, out);
      else if (name == "extension") run_extension(s, out);
      else if (name == "verify-moment") run_verify_moment(s, out, report.flags);
      else if (name == "expected-values") run_expected_values(s, out);
      else if (name == "build-from-cartan") run_build_from_cartan(s, out);
      else if (name == "build-from-extension") run_build_from_extension(s, out, options);
      else if (name == "obstruction") run_obstruction(s, out);
      else if (name == "unobstructed-construct") run_unobstructed(s, out);
      else if (name == "extension-lift") run_extension_lift(s, out);
      else if (name == "coalgebra-crosscheck") run_coalgebra(s, out, options);
      else if (name == "properties") run_properties_check(s, out, options);
      else if (name == "traces") run_traces(s, out);
      else fail(out, "unknown check");
    } catch (const std::exception& e) {
      out.ok = false;
      out.witness = e.what();
    }
    if (!out.ok) out.detail.clear();
    if (options.timing) out.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    report.checks.push_back(std::move(out));
  }
  std::sort(report.flags.begin(), report.flags.end());
  report.flags.erase(std::unique(report.flags.begin(), report.flags.end()), report.flags.end());
  return report;
}

std::string report_text(const std::vector<ScenarioReport>& reports, bool timing) {
  std::string out;
  char buf[32];
  for (const auto& r : reports) {
    out += r.scenario + ": " + (r.ok() ? "PASS" : "FAIL") + "\n";
    for (const auto& c : r.checks) {
      out += std::string("  ") + (c.ok ? "pass" : "FAIL") + "  " + c.name;
      if (timing) {
        std::snprintf(buf, sizeof buf, " (%.1f ms)", c.millis);
        out += buf;
      }
      out += c.ok ? (c.detail.empty() ? "" : ": " + c.detail) : ": " + c.witness;
      out += "\n";
    }
    if (!r.flags.empty()) out += "  flags: " + join(r.flags, ", ") + "\n";
  }
  return out;
}

}  // namespace plectic
