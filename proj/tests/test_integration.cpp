#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "ncalc/calculus.hpp"
#include "ncalc/demos.hpp"
#include "ncalc/forms.hpp"
#include "ncalc/integration.hpp"

using namespace ncalc;
using namespace ncalc::testing;

TEST(Quadrature, ExactForLowDegree) {
  const auto r = builtin_algebra("real");
  const auto v = gauss_legendre([&](double t) { return Element::scalar(r, std::pow(t, 5)); }, r, 1);
  EXPECT_NEAR(v[0], 1.0 / 6.0, 1e-15);
}

TEST(Quadrature, RefinesSmoothIntegrands) {
  const auto r = builtin_algebra("real");
  const auto res = integrate_unit_interval([&](double t) { return Element::scalar(r, std::exp(3 * t)); }, r);
  EXPECT_NEAR(res.value[0], (std::exp(3.0) - 1.0) / 3.0, 1e-9);
  EXPECT_GT(res.panels, 4u);
  EXPECT_FALSE(res.history.empty());
}

TEST(Quadrature, NoConvergence) {
  const auto r = builtin_algebra("real");
  try {
    integrate_unit_interval([&](double t) { return Element::scalar(r, std::pow(t, -0.9)); }, r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoConvergence);
  }
}

TEST(Path, Shape) {
  const auto q = quaternions();
  const Element o = Element::zero(q), i = Element::basis(q, 1);
  EXPECT_THROW(Path::polyline({o}), Error);
  EXPECT_TRUE(Path::polyline({o, i, o}).closed());
  EXPECT_FALSE(Path::segment(o, i).closed());
  const nlohmann::json open = {{"waypoints", {{0, 0, 0, 0}, {0, 1, 0, 0}}}, {"closed", true}};
  try {
    Path::from_json(q, open);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotClosed);
  }
  const nlohmann::json loop = {{"waypoints", {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}}, {"closed", true}};
  EXPECT_TRUE(Path::from_json(q, loop).closed());
}

TEST(PathIntegral, Examples) {
  const auto q = quaternions();
  Rng rng(1);
  const FormP cubic = FormP::from_tensor_poly(cubic_exact_form(q));
  const Element o = Element::zero(q), x = random_element(q, rng), a = random_element(q, rng),
                b = random_element(q, rng);
  EXPECT_LT(distance(integrate_along_path(cubic, Path::segment(o, x)).value, x * x * x), 1e-8);
  const FormP dx2 = FormP::exact(parse_poly(q, "x^2"));
  EXPECT_LT(distance(integrate_along_path(dx2, Path::polyline({a, x, b})).value, b * b - a * a), 1e-8);
  const auto d = path_dependence(three_x_squared_form(q), Element::basis(q, 1), Element::basis(q, 2), false);
  EXPECT_LT(distance(d.two_leg, d.expected_two_leg), 1e-7);
}

TEST(PathIntegral, DefiniteIntegral) {
  const auto q = quaternions();
  Rng rng(2);
  const FormP cubic = FormP::from_tensor_poly(cubic_exact_form(q));
  const auto verdict = check_integrable(cubic);
  const Element a = random_element(q, rng), b = random_element(q, rng);
  EXPECT_LT(distance(definite_integral(cubic, verdict, a, b), b * b * b - a * a * a), 1e-8);
  EXPECT_EQ(definite_integral(cubic, verdict, a, a), Element::zero(q));
  const FormP dx2 = FormP::exact(parse_poly(q, "x^2"));
  EXPECT_LT(distance(definite_integral(dx2, check_integrable(dx2), Element::zero(q), b), b * b), 1e-10);
  const FormP bad = FormP::from_tensor_poly(three_x_squared_form(q));
  try {
    definite_integral(bad, check_integrable(bad), a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCertified);
  }
}

TEST(PathIntegral, Loops) {
  const auto q = quaternions();
  const FormP dx3 = FormP::exact(parse_poly(q, "x^3"));
  const Element one = Element::unit(q), i = Element::basis(q, 1), o = Element::zero(q);
  EXPECT_LT(loop_integral(dx3, Path::polyline({o, one, one + i, i, o})).coord_norm(), 1e-8);
  // the triangle 0 -> a -> x -> 0 is the two-leg path followed by x -> 0,
  // so it carries the same gap as the two-leg path
  const Element j = Element::basis(q, 2);
  const FormP bad = FormP::from_tensor_poly(three_x_squared_form(q));
  const Element loop = loop_integral(bad, Path::polyline({o, i, j, o}));
  EXPECT_GT(loop.coord_norm(), 0.1);
  EXPECT_LT(distance(loop, expected_gap(i, j)), 1e-7);
  EXPECT_EQ(loop_integral(bad, Path::polyline({i, i})), Element::zero(q));
  try {
    loop_integral(bad, Path::segment(o, i));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotClosed);
  }
}

TEST(PathIntegral, Gap) {
  const auto c = builtin_algebra("complex");
  Rng rng(3);
  const FormP bad_c = FormP::from_tensor_poly(three_x_squared_form(c));
  EXPECT_LT(path_dependence_gap(bad_c, random_element(c, rng), random_element(c, rng)).coord_norm(), 1e-9);
  const auto q = quaternions();
  const Element i = Element::basis(q, 1), j = Element::basis(q, 2);
  const FormP bad = FormP::from_tensor_poly(three_x_squared_form(q));
  EXPECT_LT(distance(path_dependence_gap(bad, i, j), expected_gap(i, j)), 1e-7);
  const FormP cubic = FormP::from_tensor_poly(cubic_exact_form(q));
  EXPECT_LT(path_dependence_gap(cubic, random_element(q, rng), random_element(q, rng)).coord_norm(), 1e-8);
}

TEST(PathIntegral, SubdivisionAdditivity) {
  const auto q = quaternions();
  Rng rng(4);
  const FormP bad = FormP::from_tensor_poly(three_x_squared_form(q));
  for (int n = 0; n < 5; ++n) {
    std::vector<Element> pts;
    for (int k = 0; k < 4; ++k) pts.push_back(random_element(q, rng));
    Element legs = Element::zero(q);
    for (int k = 0; k < 3; ++k) legs += integrate_along_path(bad, Path::segment(pts[k], pts[k + 1])).value;
    EXPECT_LT(distance(integrate_along_path(bad, Path::polyline(pts)).value, legs), 1e-9);
  }
}

TEST(PathIntegral, CollinearWaypointInsertion) {
  const auto q = quaternions();
  Rng rng(5);
  const FormP bad = FormP::from_tensor_poly(three_x_squared_form(q));
  const Element a = random_element(q, rng), b = random_element(q, rng);
  const Element mid = a + (b - a) * 0.3;
  EXPECT_LT(distance(integrate_along_path(bad, Path::segment(a, b)).value,
                     integrate_along_path(bad, Path::polyline({a, mid, b})).value),
            1e-10);
}

TEST(PathIntegral, ExactFormsOnRandomPaths) {
  const auto q = quaternions();
  Rng rng(6);
  for (int n = 0; n < 3; ++n) {
    const auto f = random_poly(q, rng, 3);
    const FormP df = FormP::exact(f);
    const Element a = random_element(q, rng), b = random_element(q, rng);
    for (int p = 0; p < 5; ++p) {
      std::vector<Element> pts{a};
      for (int k = 0; k < 3; ++k) pts.push_back(random_element(q, rng));
      pts.push_back(b);
      EXPECT_LT(distance(integrate_along_path(df, Path::polyline(pts)).value, f(b) - f(a)), 1e-7);
    }
  }
}

TEST(PathIntegral, SmoothCurve) {
  const auto q = quaternions();
  const Element i = Element::basis(q, 1), j = Element::basis(q, 2);
  const Path arc = Path::smooth(q, [&](double t) { return i * std::cos(t) + j * std::sin(t); });
  const FormP cubic = FormP::from_tensor_poly(cubic_exact_form(q));
  const Element end = arc.end();
  const auto res = integrate_along_path(cubic, arc);
  EXPECT_LT(distance(res.value, end * end * end - i * i * i), 1e-8);
  EXPECT_GT(res.panels, 4u);
}

TEST(AppendixA, ExpansionsMatchIntegrands) {
  const auto q = quaternions();
  Rng rng(7);
  const Element a = random_element(q, rng), x = random_element(q, rng);
  const auto p1 = expansion_a1(a, x), p2 = expansion_a2(a, x);
  for (double t : {0.0, 0.25, 0.5, 1.0}) {
    EXPECT_LT(distance(p1.at(t), integrand_a1(a, x, t)), 1e-12);
    EXPECT_LT(distance(p2.at(t), integrand_a2(a, x, t)), 1e-12);
  }
  EXPECT_LT(distance(p1.exact_integral(), x * x * x - a * a * a), 1e-12);
}
