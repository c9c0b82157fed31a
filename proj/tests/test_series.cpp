#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "ncalc/calculus.hpp"
#include "ncalc/series.hpp"

using namespace ncalc;
using namespace ncalc::testing;

TEST(Series, SmallCoefficientTables) {
  EXPECT_EQ(solve_symmetric_system(SystemKind::Exp, 5)[0].coeffs,
            (std::vector<double>{1, 1, 0.5, 1.0 / 6, 1.0 / 24, 1.0 / 120}));
  const auto el = solve_symmetric_system(SystemKind::Elliptic, 4);
  EXPECT_EQ(el[0].coeffs, (std::vector<double>{0, 1, 0, -1.0 / 6, 0}));
  EXPECT_EQ(el[1].coeffs, (std::vector<double>{1, 0, -0.5, 0, 1.0 / 24}));
  const auto hy = solve_symmetric_system(SystemKind::Hyperbolic, 0);
  EXPECT_EQ(hy[0].coeffs, std::vector<double>{0});
  EXPECT_EQ(hy[1].coeffs, std::vector<double>{1});
  EXPECT_THROW(solve_symmetric_system(SystemKind::Exp, 65), Error);
  EXPECT_THROW(parse_system_kind("tan"), Error);
}

TEST(Series, EnumeratedWordsAgreeWithRecurrence) {
  const auto q = quaternions();
  Rng rng(1);
  const Element h = random_element(q, rng, 0.5);
  for (auto kind : {SystemKind::Exp, SystemKind::Hyperbolic, SystemKind::Elliptic}) {
    const auto s = solve_symmetric_system(kind, 8)[0];
    Element power = Element::unit(q);
    double f = 1.0;
    for (std::size_t n = 0; n <= 8; ++n) {
      if (n) f *= static_cast<double>(n);
      // the n-th diagonal derivative is n! c_n h^n
      EXPECT_LT(distance(se_enumerated_derivative(kind, n, h), power * (s.coeffs[n] * f)), 1e-12) << n;
      power = power * h;
    }
  }
}

TEST(Series, Evaluation) {
  const auto q = quaternions();
  const auto exp = solve_symmetric_system(SystemKind::Exp, 20)[0];
  EXPECT_EQ(eval_series(exp, Element::zero(q)), Element::unit(q));
  EXPECT_LT(distance(eval_series(exp, parse_element(q, "pi/2 i")), Element::basis(q, 1)), 1e-8);
  const auto r = builtin_algebra("real");
  const auto hy = solve_symmetric_system(SystemKind::Hyperbolic, 30);
  EXPECT_NEAR(eval_series(hy[0], Element::scalar(r, 1.0))[0], std::sinh(1.0), 1e-10);
  EXPECT_NEAR(eval_series(hy[1], Element::scalar(r, 1.0))[0], std::cosh(1.0), 1e-10);
  try {
    eval_series(exp, Element::scalar(q, 11.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfDomain);
  }
  EXPECT_NO_THROW(eval_series(solve_symmetric_system(SystemKind::Exp, 64)[0], Element::scalar(q, 11.0), {true}));
}

TEST(Series, PythagoreanIdentities) {
  const auto q = quaternions();
  const auto el = solve_symmetric_system(SystemKind::Elliptic, 30);
  const auto hy = solve_symmetric_system(SystemKind::Hyperbolic, 30);
  Rng rng(2);
  for (int n = 0; n < 20; ++n) {
    const Element x = random_in_ball(q, rng);
    const Element s = eval_series(el[0], x), c = eval_series(el[1], x);
    const Element sh = eval_series(hy[0], x), ch = eval_series(hy[1], x);
    EXPECT_LT(distance(s * s + c * c, Element::unit(q)), 1e-10);
    EXPECT_LT(distance(ch * ch - sh * sh, Element::unit(q)), 1e-10);
  }
}

TEST(Series, ExpIsAHomomorphismOnlyForCommutingArguments) {
  const auto q = quaternions();
  const auto exp = solve_symmetric_system(SystemKind::Exp, 30)[0];
  auto gap = [&](const Element& a, const Element& b) {
    return distance(eval_series(exp, a + b), eval_series(exp, a) * eval_series(exp, b));
  };
  const Element i = Element::basis(q, 1), j = Element::basis(q, 2);
  EXPECT_LT(gap(i, i * 2.0), 1e-8);
  EXPECT_GT(gap(i, j), 0.1);
}

TEST(Series, SatisfiesItsSymmetrizedEquation) {
  // d exp(x) o a = (y a + a y) / 2 holds along x = t a; in general only when [x, a] = 0
  const auto q = quaternions();
  const auto exp = solve_symmetric_system(SystemKind::Exp, 30)[0];
  const Map f = [&](const Element& y) { return eval_series(exp, y); };
  Rng rng(3);
  for (int n = 0; n < 10; ++n) {
    const Element a = random_element(q, rng, 0.5);
    const Element x = a * 0.7 + Element::scalar(q, 0.2);
    const Element y = f(x);
    EXPECT_LT(distance(gateaux(f, x, a), (y * a + a * y) * 0.5), 1e-8);
  }
}

TEST(Integration, TaylorAntiderivative) {
  const auto q = quaternions();
  Rng rng(4);
  const Element C = random_element(q, rng);
  const auto f = indefinite_integral_taylor(parse_form(q, "1@x^2 + x@x + x^2@1"), 0, C);
  const Element x = random_element(q, rng);
  EXPECT_LT(distance(f(x), x * x * x + C), 1e-12);
  const Element f0 = random_element(q, rng), f1 = random_element(q, rng);
  const auto g = TensorPoly::one_form(NoncommPoly::constant(f0), NoncommPoly::constant(f1));
  EXPECT_LT(distance(indefinite_integral_taylor(g, 0, C)(x), f0 * x * f1 + C), 1e-12);
  try {
    indefinite_integral_taylor(parse_form(q, "3@x^2"), 0, C);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIntegrable);
  }
}

TEST(Integration, DerivativeOfAntiderivative) {
  const auto q = quaternions();
  Rng rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    const auto p = random_poly(q, rng, 3);
    const TensorPoly g = diff_poly_tensor(p);
    const auto f = indefinite_integral_taylor(g, 0, Element::zero(q));
    const auto df = diff_poly(f);
    for (int n = 0; n < 20; ++n) {
      const Element x = random_element(q, rng), a = random_element(q, rng);
      EXPECT_LT(rel_error(df(x)({a}), g.at(x)({a})), 1e-9);
    }
  }
}
