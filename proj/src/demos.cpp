#include "ncalc/demos.hpp"

#include <cmath>

#include "ncalc/expr.hpp"
#include "ncalc/random.hpp"
#include "ncalc/series.hpp"

namespace ncalc {

TensorPoly cubic_exact_form(const AlgebraPtr& algebra) { return parse_form(algebra, "1@x^2 + x@x + x^2@1"); }

TensorPoly three_x_squared_form(const AlgebraPtr& algebra) { return parse_form(algebra, "3@x^2"); }

Element expected_gap(const Element& a, const Element& x) {
  const Element x2 = x * x, a2 = a * a;
  return x2 * a * 0.5 + x * a * x * 0.5 - a * x2 + x * a2 - a * x * a * 0.5 - a2 * x * 0.5;
}

PathDependence path_dependence(const TensorPoly& form, const Element& a, const Element& x, bool integrable) {
  const FormP omega = FormP::from_tensor_poly(form);
  const Element origin = Element::zero(x.algebra());
  const auto linear = integrate_along_path(omega, Path::segment(origin, x));
  const auto two_leg = integrate_along_path(omega, Path::polyline({origin, a, x}));
  const Element x3 = x * x * x;
  const Element gap = integrable ? Element::zero(x.algebra()) : expected_gap(a, x);
  PathDependence out{linear.value,
                     two_leg.value,
                     two_leg.value - linear.value,
                     x3,
                     x3 + gap,
                     gap,
                     loop_integral(omega, Path::polyline({origin, a, x, origin})),
                     linear.panels + two_leg.panels,
                     two_leg.history};
  return out;
}

TPolynomial expansion_a1(const Element& a, const Element& x) {
  const Element a2 = a * a, a3 = a2 * a, x2 = x * x, x3 = x2 * x;
  const Element xa2 = x * a2, axa = a * x * a, a2x = a2 * x;
  const Element x2a = x2 * a, xax = x * a * x, ax2 = a * x2;
  return {xa2 + axa + a2x - a3 * 3.0,
          x2a * 2.0 + xax * 2.0 + ax2 * 2.0 - xa2 * 4.0 - axa * 4.0 - a2x * 4.0 + a3 * 6.0,
          (x3 - x2a - xax + xa2 - ax2 + axa + a2x - a3) * 3.0};
}

TPolynomial expansion_a2(const Element& a, const Element& x) {
  const Element a2 = a * a, a3 = a2 * a, x2 = x * x, x3 = x2 * x;
  const Element xa2 = x * a2, axa = a * x * a, a2x = a2 * x;
  const Element x2a = x2 * a, xax = x * a * x, ax2 = a * x2;
  return {xa2 - a3, x2a + xax - xa2 * 2.0 - a2x - axa + a3 * 2.0, x3 - x2a - xax - ax2 + xa2 + axa + a2x - a3};
}

Element integrand_a1(const Element& a, const Element& x, double t) {
  const Element y = a + (x - a) * t, d = x - a;
  return y * y * d + y * d * y + d * y * y;
}

Element integrand_a2(const Element& a, const Element& x, double t) {
  const Element y = a + (x - a) * t, d = x - a;
  return d * y * y;
}

ExpCommute exp_commute_demo(std::size_t order) {
  const auto q = builtin_algebra("quaternion");
  const auto s = solve_symmetric_system(SystemKind::Exp, order).front();
  auto gap = [&](const Element& a, const Element& b) {
    return (eval_series(s, a + b) - eval_series(s, a) * eval_series(s, b)).coord_norm();
  };
  const Element i = Element::basis(q, 1), j = Element::basis(q, 2);
  return {gap(i, i * 2.0), gap(i, j)};
}

NormDemo norm_demo(std::size_t budget, std::uint64_t seed) {
  const auto h = builtin_algebra("hyperbolic");
  const auto c = builtin_algebra("complex");
  const auto m = h->with_norm(NormKind::MinkowskiPseudo);
  return {product_operator_norm(h, budget, seed), product_operator_norm(rescale_norm(h, std::sqrt(2.0)), budget, seed),
          product_operator_norm(c, budget, seed), norm(Element(m, {1.0, 1.0}))};
}

Map a3_coefficient_a() {
  const auto p = parse_poly(builtin_algebra("complex"), "3x0^2 + 6x0x1 i");
  return [p](const Element& z) { return p.eval(z); };
}

Map a3_coefficient_b() {
  const auto p = parse_poly(builtin_algebra("complex"), "-3x1^2");
  return [p](const Element& z) { return p.eval(z); };
}

double difference_variation(const Map& f, const Map& g, const std::vector<Element>& probes) {
  if (probes.empty()) return 0.0;
  const Element base = f(probes.front()) - g(probes.front());
  double worst = 0.0;
  for (const auto& z : probes) worst = std::max(worst, (f(z) - g(z) - base).coord_norm());
  return worst;
}

ComplexA3 complex_a3_demo(std::size_t probes, std::uint64_t seed) {
  const auto c = builtin_algebra("complex");
  const Map a = a3_coefficient_a(), b = a3_coefficient_b();
  ComplexA3 out{form_integrable_complex(a, b, probes, seed), 0, 0, 0, 0};
  const Map f = integrate_complex_form(a, b, probes, seed);
  Rng rng(seed + 1);
  std::vector<Element> zs;
  for (std::size_t k = 0; k < probes; ++k) zs.push_back(random_in_ball(c, rng));
  const auto eighth = parse_poly(c, "x^3 - (x - I(x))^3/8");
  const auto quarter = parse_poly(c, "x^3 - (x - I(x))^3/4");
  const auto components = parse_poly(c, "x0^3 - 3x0 x1^2 + i(3x0^2 x1 + x1^3)");
  auto as_map = [](const NoncommPoly& p) { return Map([p](const Element& z) { return p.eval(z); }); };
  out.variation_eighth = difference_variation(f, as_map(eighth), zs);
  out.variation_quarter = difference_variation(f, as_map(quarter), zs);
  out.variation_components = difference_variation(f, as_map(components), zs);
  for (const auto& z : zs) {
    const CLinearMap d = decompose_derivative(f, z);
    out.derivative_error = std::max(out.derivative_error, (d.a - a(z)).coord_norm() + (d.b - b(z)).coord_norm());
  }
  return out;
}

}  // namespace ncalc
