// ncalc: command-line front end for the noncommutative calculus library.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncalc/calculus.hpp"
#include "ncalc/complexfield.hpp"
#include "ncalc/demos.hpp"
#include "ncalc/expr.hpp"
#include "ncalc/format.hpp"
#include "ncalc/forms.hpp"
#include "ncalc/integration.hpp"
#include "ncalc/series.hpp"

using nlohmann::json;
using namespace ncalc;

namespace {

struct Options {
  std::string algebra = "quaternion";
  std::string spec;
  std::string format = "text";
  std::uint64_t seed = 42;
  std::size_t panels = 4;
  std::size_t order = 0;  // 0 = command default
};

AlgebraPtr load(const Options& o) { return o.spec.empty() ? builtin_algebra(o.algebra) : load_algebra_file(o.spec); }

class Report {
 public:
  explicit Report(const Options& o) : json_(o.format == "json") {}

  void text(const std::string& key, const std::string& value) {
    lines_.emplace_back(key, value);
  }
  void value(const std::string& key, json v, std::string shown = {}) {
    doc_[key] = v;
    lines_.emplace_back(key, shown.empty() ? (v.is_string() ? v.get<std::string>() : v.dump()) : shown);
  }
  void element(const std::string& key, const Element& e) { value(key, element_json(e), format_element(e)); }
  json& doc() { return doc_; }

  void print() const {
    if (json_) {
      std::cout << doc_.dump(2) << '\n';
      return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : lines_) width = std::max(width, k.size());
    for (const auto& [k, v] : lines_) std::cout << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }

 private:
  bool json_;
  json doc_ = json::object();
  std::vector<std::pair<std::string, std::string>> lines_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

json history_json(const std::vector<std::pair<std::size_t, double>>& h) {
  json out = json::array();
  for (const auto& [p, d] : h) out.push_back({{"panels", p}, {"change", d}});
  return out;
}

// ---- derive ----

struct DeriveArgs {
  std::string poly, point, direction;
};

void cmd_derive(const Options& o, const DeriveArgs& a) {
  const auto alg = load(o);
  const NoncommPoly p = parse_poly(alg, a.poly);
  const Element x = parse_element(alg, a.point);
  const Element h = parse_element(alg, a.direction);
  Report r(o);
  r.value("poly", format_poly(p));
  const std::size_t k = o.order == 0 ? 1 : o.order;
  r.value("order", k);
  Element symbolic = Element::zero(alg);
  if (k == 1) {
    const TensorPoly d = diff_poly_tensor(p);
    r.value("tensor", format_tensor(d));
    symbolic = d.at(x)({h});
  } else {
    const std::vector<Element> args(k, h);
    symbolic = diff_poly_k_at(p, k, x).apply(args);
  }
  r.element("value", symbolic);
  // Finite-difference cross-check, nested for higher orders.
  Map f = [p](const Element& y) { return p.eval(y); };
  for (std::size_t i = 0; i < k; ++i) f = [f, h](const Element& y) { return gateaux(f, y, h); };
  const Element numeric = f(x);
  const double residual = (numeric - symbolic).coord_norm() / std::max(1.0, symbolic.coord_norm());
  r.element("gateaux", numeric);
  r.value("residual", residual, fmt(residual));
  r.print();
}

// ---- integrate-path ----

struct PathArgs {
  std::string form = "1@x^2 + x@x + x^2@1";
  std::string path_file, waypoints, demo;
  std::string a = "i", x = "j";
  bool loop = false;
};

Path parse_path(const AlgebraPtr& alg, const PathArgs& a) {
  if (!a.path_file.empty()) {
    std::ifstream in(a.path_file);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + a.path_file);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::MalformedSpec, e.what());
    }
    return Path::from_json(alg, doc);
  }
  if (a.waypoints.empty()) throw Error(ErrorKind::InvalidArgument, "give --path or --waypoints");
  std::vector<Element> pts;
  std::stringstream ss(a.waypoints);
  for (std::string item; std::getline(ss, item, ',');) pts.push_back(parse_element(alg, item));
  return Path::polyline(std::move(pts));
}

void report_demo(Report& r, const PathDependence& d) {
  r.element("linear", d.linear);
  r.element("two_leg", d.two_leg);
  r.element("gap", d.gap);
  r.element("expected_gap", d.expected_gap);
  const double err = (d.gap - d.expected_gap).coord_norm();
  r.value("gap_error", err, fmt(err));
  r.element("loop", d.loop);
  r.value("panels", d.panels);
  r.value("history", history_json(d.history));
}

void cmd_integrate_path(const Options& o, const PathArgs& a) {
  const auto alg = load(o);
  Report r(o);
  if (!a.demo.empty()) {
    const Element av = parse_element(alg, a.a), xv = parse_element(alg, a.x);
    r.value("demo", a.demo);
    r.element("a", av);
    r.element("x", xv);
    if (a.demo == "path-dependence") report_demo(r, path_dependence(three_x_squared_form(alg), av, xv, false));
    else if (a.demo == "integrable") report_demo(r, path_dependence(cubic_exact_form(alg), av, xv, true));
    else throw Error(ErrorKind::InvalidArgument, "unknown demo '" + a.demo + "'");
    r.print();
    return;
  }
  const TensorPoly form = parse_form(alg, a.form);
  const Path path = parse_path(alg, a);
  if (a.loop && !path.closed()) throw Error(ErrorKind::NotClosed, "--loop needs a closed path");
  const FormP omega = FormP::from_tensor_poly(form);
  r.value("form", format_tensor(form));
  const auto result = integrate_along_path(omega, path, o.panels);
  r.element("value", result.value);
  r.value("panels", result.panels);
  r.value("history", history_json(result.history));
  r.print();
}

// ---- series ----

struct SeriesArgs {
  std::string kind = "exp";
  std::string point;
  bool allow_large = false;
};

void cmd_series(const Options& o, const SeriesArgs& a) {
  const auto alg = load(o);
  const std::size_t n = o.order == 0 ? 30 : o.order;
  const auto system = solve_symmetric_system(parse_system_kind(a.kind), n);
  // sinh and sin are the first component, cosh and cos the second.
  const bool second = a.kind == "cosh" || a.kind == "cos";
  Report r(o);
  r.value("kind", a.kind);
  r.value("order", n);
  if (a.kind == "exp" || a.kind == "sinh" || a.kind == "cosh" || a.kind == "sin" || a.kind == "cos") {
    const auto& s = system[second ? 1 : 0];
    r.value("coefficients", s.coeffs);
    if (!a.point.empty()) {
      const Element x = parse_element(alg, a.point);
      r.element("x", x);
      r.element("value", eval_series(s, x, {a.allow_large}));
    }
  } else {
    const char* names[2][2] = {{"sinh", "cosh"}, {"sin", "cos"}};
    const int row = parse_system_kind(a.kind) == SystemKind::Elliptic ? 1 : 0;
    for (int c = 0; c < 2; ++c) {
      r.value(std::string(names[row][c]) + "_coefficients", system[c].coeffs);
      if (!a.point.empty())
        r.element(std::string(names[row][c]), eval_series(system[c], parse_element(alg, a.point), {a.allow_large}));
    }
  }
  r.print();
}

// ---- forms ----

struct FormsArgs {
  std::string action;
  std::string form = "1@x^2 + x@x + x^2@1";
  std::string point;
  std::size_t probes = 32;
};

void cmd_forms(const Options& o, const FormsArgs& a) {
  const auto alg = load(o);
  const TensorPoly t = parse_form(alg, a.form);
  const FormP omega = FormP::from_tensor_poly(t);
  Report r(o);
  r.value("form", format_tensor(t));
  if (a.action == "check") {
    const auto v = check_integrable(omega, a.probes, o.seed);
    r.value("verdict", v.certified ? "certified" : "refuted");
    r.value("max_residual", v.max_residual, fmt(v.max_residual));
    if (!v.certified) {
      r.element("witness_x", *v.x);
      r.element("witness_a1", *v.a1);
      r.element("witness_a2", *v.a2);
      r.element("witness_value", exterior_differential(omega)(*v.x, {*v.a1, *v.a2}));
    }
  } else if (a.action == "d2") {
    const double res = d_squared_residual(omega, a.probes, o.seed);
    r.value("d2_residual", res, fmt(res));
    r.value("tensor_d", format_tensor(exterior_differential(t)));
  } else if (a.action == "poincare") {
    const Element x = parse_element(alg, a.point.empty() ? "0" : a.point);
    const FormP k = poincare_k(omega);
    r.element("x", x);
    r.element("k_value", k.value(x));
  } else {
    throw Error(ErrorKind::InvalidArgument, "forms action must be check, d2 or poincare");
  }
  r.print();
}

// ---- complex ----

struct ComplexArgs {
  std::string action;
  std::string function = "x^3";
  std::string a = "3x0^2 + 6x0x1 i";
  std::string b = "-3x1^2";
  std::string reference = "x^3 - (x - I(x))^3/8";
  std::size_t probes = 20;
};

Map poly_map(const NoncommPoly& p) {
  return [p](const Element& z) { return p.eval(z); };
}

void cmd_complex(const Options& o, const ComplexArgs& a) {
  const auto c = builtin_algebra("complex");
  Report r(o);
  if (a.action == "classify") {
    const NoncommPoly f = parse_poly(c, a.function);
    const auto cls = classify(poly_map(f), a.probes, o.seed);
    r.value("function", format_poly(f));
    r.value("class", to_string(cls.kind));
    r.value("max_a", cls.max_a, fmt(cls.max_a));
    r.value("max_b", cls.max_b, fmt(cls.max_b));
  } else if (a.action == "integrate") {
    const Map am = poly_map(parse_poly(c, a.a)), bm = poly_map(parse_poly(c, a.b));
    const auto verdict = form_integrable_complex(am, bm, a.probes, o.seed);
    r.value("verdict", verdict.certified ? "certified" : "refuted");
    r.value("max_residual", verdict.max_residual, fmt(verdict.max_residual));
    if (!verdict.certified) {
      r.element("witness", verdict.witness);
      r.print();
      throw Error(ErrorKind::NotCertified, "form is not integrable");
    }
    const Map f = integrate_complex_form(am, bm, a.probes, o.seed);
    const NoncommPoly ref = parse_poly(c, a.reference);
    Rng rng(o.seed + 1);
    std::vector<Element> zs;
    for (std::size_t k = 0; k < a.probes; ++k) zs.push_back(random_in_ball(c, rng));
    const double variation = difference_variation(f, poly_map(ref), zs);
    r.value("reference", format_poly(ref));
    r.value("variation", variation, fmt(variation));
    r.value("matches_reference", variation < 1e-6);
    r.element("f(1+i)", f(complex_number(1, 1)));
  } else {
    throw Error(ErrorKind::InvalidArgument, "complex action must be classify or integrate");
  }
  r.print();
}

// ---- demo ----

void cmd_demo(const Options& o, const std::string& name) {
  Report r(o);
  const bool all = name == "all";
  bool known = all;
  if (all || name == "path-dependence") {
    known = true;
    const auto q = builtin_algebra("quaternion");
    const auto d = path_dependence(three_x_squared_form(q), Element::basis(q, 1), Element::basis(q, 2), false);
    r.element("path_dependence.gap", d.gap);
    r.element("path_dependence.expected_gap", d.expected_gap);
  }
  if (all || name == "integrable") {
    known = true;
    const auto q = builtin_algebra("quaternion");
    const auto d = path_dependence(cubic_exact_form(q), Element::basis(q, 1), Element::basis(q, 2), true);
    r.element("integrable.gap", d.gap);
  }
  if (all || name == "exp") {
    known = true;
    const auto e = exp_commute_demo();
    r.value("exp.commuting_gap", e.commuting_gap, fmt(e.commuting_gap));
    r.value("exp.noncommuting_gap", e.noncommuting_gap, fmt(e.noncommuting_gap));
  }
  if (all || name == "norms") {
    known = true;
    const auto n = norm_demo(20000, o.seed);
    r.value("norms.hyperbolic_euclidean", n.hyperbolic_euclidean);
    r.value("norms.hyperbolic_rescaled", n.hyperbolic_rescaled);
    r.value("norms.complex", n.complex_modulus);
    r.value("norms.minkowski_1+j", n.minkowski_one_plus_j);
  }
  if (all || name == "a3") {
    known = true;
    const auto a3 = complex_a3_demo(20, o.seed);
    r.value("a3.certified", a3.verdict.certified);
    r.value("a3.variation_vs_eighth", a3.variation_eighth, fmt(a3.variation_eighth));
    r.value("a3.variation_vs_quarter", a3.variation_quarter, fmt(a3.variation_quarter));
    r.value("a3.variation_vs_components", a3.variation_components, fmt(a3.variation_components));
  }
  if (!known) throw Error(ErrorKind::InvalidArgument, "unknown demo '" + name + "'");
  r.print();
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::MalformedSpec:
    case ErrorKind::NotClosed:
    case ErrorKind::InvalidArgument:
    case ErrorKind::UnknownBasisMap:
    case ErrorKind::BadUnit:
      return 2;
    default:
      return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calculus over finite-dimensional associative algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-A,--algebra", o.algebra, "builtin algebra: real, complex, hyperbolic, quaternion");
  app.add_option("--spec", o.spec, "algebra JSON document");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--panels", o.panels, "starting quadrature panels");
  app.add_option("--order", o.order, "derivative or series order");

  DeriveArgs da;
  auto* derive = app.add_subcommand("derive", "differentiate a polynomial");
  derive->set_help_flag("--help");
  derive->add_option("-p,--poly", da.poly, "polynomial in x")->required();
  derive->add_option("-x,--point", da.point, "base point")->required();
  derive->add_option("-h,--direction", da.direction, "direction")->required();

  PathArgs pa;
  auto* integ = app.add_subcommand("integrate-path", "integrate a 1-form along a path");
  integ->add_option("--form", pa.form, "1-form such as '3@x^2'");
  integ->add_option("--path", pa.path_file, "path JSON document");
  integ->add_option("--waypoints", pa.waypoints, "waypoints separated by commas");
  integ->add_flag("--loop", pa.loop, "require a closed path");
  integ->add_option("--demo", pa.demo, "path-dependence or integrable");
  integ->add_option("-a", pa.a, "intermediate point for the demo");
  integ->add_option("-x", pa.x, "end point for the demo");

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "series solutions of the symmetric systems");
  series->add_option("kind", sa.kind, "exp, sinh, cosh, sin, cos, hyperbolic, elliptic");
  series->add_option("-N", o.order, "order");
  series->add_option("-x,--point", sa.point, "evaluation point");
  series->add_flag("--allow-large", sa.allow_large, "evaluate beyond |x| = 10");

  FormsArgs fa;
  auto* forms = app.add_subcommand("forms", "differential forms");
  forms->add_option("action", fa.action, "check, d2 or poincare")->required();
  forms->add_option("--form", fa.form, "1-form");
  forms->add_option("-x,--point", fa.point, "point for poincare");
  forms->add_option("--probes", fa.probes, "random probes");

  ComplexArgs ca;
  auto* complex = app.add_subcommand("complex", "complex-field tools");
  complex->add_option("action", ca.action, "classify or integrate")->required();
  complex->add_option("-f,--function", ca.function, "polynomial in x, I(x), x0, x1");
  complex->add_option("--a", ca.a, "coefficient of E");
  complex->add_option("--b", ca.b, "coefficient of I");
  complex->add_option("--reference", ca.reference, "expected antiderivative up to a constant");
  complex->add_option("--probes", ca.probes, "random probes");

  std::string demo_name = "all";
  auto* demo = app.add_subcommand("demo", "worked examples");
  demo->add_option("name", demo_name, "path-dependence, integrable, exp, norms, a3 or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*derive) cmd_derive(o, da);
    else if (*integ) cmd_integrate_path(o, pa);
    else if (*series) cmd_series(o, sa);
    else if (*forms) cmd_forms(o, fa);
    else if (*complex) cmd_complex(o, ca);
    else if (*demo) cmd_demo(o, demo_name);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 0;
}
