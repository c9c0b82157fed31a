// Invariants swept over every builtin algebra.

#include <gtest/gtest.h>

#include "support.hpp"
#include "ncalc/calculus.hpp"
#include "ncalc/forms.hpp"
#include "ncalc/integration.hpp"

using namespace ncalc;
using namespace ncalc::testing;

namespace {

class Property : public ::testing::TestWithParam<const char*> {
 protected:
  AlgebraPtr alg = builtin_algebra(GetParam());
  Rng rng{std::hash<std::string>{}(GetParam())};

  Element rand(double scale = 1.0) { return random_element(alg, rng, scale); }
  double tol(double base, const Element& value) const { return base * std::max(1.0, value.coord_norm()); }
};

PolyMap random_map(const AlgebraPtr& a, Rng& rng, std::size_t degree) {
  PolyMap f(a, degree);
  const auto perms = gen_S(degree);
  for (std::size_t t = 0; t < 3; ++t) {
    Term term;
    for (std::size_t k = 0; k <= degree; ++k) term.coeffs.push_back(random_element(a, rng));
    term.slots.assign(degree, 0);
    term.perm = perms[t % perms.size()];
    f.add_term(std::move(term));
  }
  return f;
}

}  // namespace

TEST_P(Property, Associative) {
  for (int n = 0; n < 200; ++n) {
    const Element a = rand(), b = rand(), c = rand();
    EXPECT_LT(distance((a * b) * c, a * (b * c)), 1e-12);
  }
}

TEST_P(Property, DistributiveAndBilinear) {
  std::normal_distribution<double> g;
  for (int n = 0; n < 50; ++n) {
    const Element a = rand(), b = rand(), c = rand();
    const double s = g(rng);
    EXPECT_LT(distance(a * (b + c), a * b + a * c), 1e-12);
    EXPECT_LT(distance((a * s) * b, (a * b) * s), 1e-12);
  }
}

TEST_P(Property, PolyMapMultilinear) {
  std::normal_distribution<double> g;
  for (std::size_t degree = 1; degree <= 3; ++degree) {
    const PolyMap f = random_map(alg, rng, degree);
    for (int n = 0; n < 10; ++n) {
      std::vector<Element> args;
      for (std::size_t s = 0; s < degree; ++s) args.push_back(rand());
      const std::size_t slot = static_cast<std::size_t>(n) % degree;
      const Element u = rand(), v = rand();
      const double alpha = g(rng), beta = g(rng);
      auto au = args, av = args, mix = args;
      au[slot] = u;
      av[slot] = v;
      mix[slot] = u * alpha + v * beta;
      EXPECT_LT(distance(f(mix), f(au) * alpha + f(av) * beta), tol(1e-11, f(mix)));
    }
  }
}

TEST_P(Property, AlternationIdempotentAndSkew) {
  for (std::size_t degree = 2; degree <= 4; ++degree) {
    const PolyMap a = alternate(random_map(alg, rng, degree));
    std::vector<Element> args;
    for (std::size_t s = 0; s < degree; ++s) args.push_back(rand());
    EXPECT_LT(distance(alternate(a)(args), a(args)), tol(1e-11, a(args)));
    auto swapped = args;
    std::swap(swapped[0], swapped[degree - 1]);
    EXPECT_LT(distance(a(swapped), -a(args)), tol(1e-11, a(args)));
  }
}

TEST_P(Property, ClosedDerivativeMatchesGateaux) {
  for (int n = 0; n < 10; ++n) {
    const auto p = random_poly(alg, rng, 3);
    const Element x = rand(), h = rand();
    EXPECT_LT(rel_error(diff_poly(p)(x)({h}), gateaux([&](const Element& y) { return p(y); }, x, h)), 1e-6);
  }
}

TEST_P(Property, SumProductAndChainRules) {
  const auto f = random_poly(alg, rng, 2), g = random_poly(alg, rng, 2);
  const Map F = [&](const Element& y) { return f(y); }, G = [&](const Element& y) { return g(y); };
  const auto dg = diff_poly(g);
  for (int n = 0; n < 10; ++n) {
    const Element x = rand(), a = rand();
    const Element sum = gateaux([&](const Element& y) { return f(y) + g(y); }, x, a);
    EXPECT_LT(distance(sum, gateaux(F, x, a) + gateaux(G, x, a)), tol(1e-8, sum));
    const Element prod = gateaux([&](const Element& y) { return f(y) * g(y); }, x, a);
    EXPECT_LT(distance(prod, gateaux(F, x, a) * g(x) + f(x) * gateaux(G, x, a)), tol(1e-7, prod));
    const Element chain = gateaux([&](const Element& y) { return g(f(y)); }, x, a);
    EXPECT_LT(distance(chain, dg(f(x))({gateaux(F, x, a)})), tol(1e-6, chain));
  }
}

TEST_P(Property, SubdivisionAdditivity) {
  const FormP omega = FormP::from_tensor_poly(random_tensor_form(alg, rng, 1, 2));
  for (int n = 0; n < 5; ++n) {
    std::vector<Element> pts{rand(), rand(), rand(), rand()};
    Element legs = Element::zero(alg);
    for (int k = 0; k < 3; ++k) legs += integrate_along_path(omega, Path::segment(pts[k], pts[k + 1])).value;
    const Element whole = integrate_along_path(omega, Path::polyline(pts)).value;
    EXPECT_LT(distance(whole, legs), tol(1e-9, whole));
  }
}

TEST_P(Property, ExactFormsArePathIndependent) {
  const auto f = random_poly(alg, rng, 3);
  const FormP df = FormP::exact(f);
  EXPECT_TRUE(check_integrable(df).certified);
  for (int n = 0; n < 5; ++n) {
    const Element a = rand(), b = rand();
    const Element value = integrate_along_path(df, Path::polyline({a, rand(), rand(), b})).value;
    EXPECT_LT(distance(value, f(b) - f(a)), tol(1e-7, value));
  }
}

TEST_P(Property, DSquaredVanishes) {
  for (std::size_t p : {1u, 2u}) {
    const FormP omega = FormP::from_tensor_poly(random_tensor_form(alg, rng, p, 2));
    EXPECT_LT(d_squared_residual(omega, 4, 7), 5e-5);
  }
}

TEST_P(Property, HomotopyFormula) {
  const TensorPoly t = random_tensor_form(alg, rng, 1, 2);
  const FormP omega = FormP::from_tensor_poly(t);
  const FormP dk = exterior_differential(poincare_k(omega));
  const FormP kd = poincare_k(FormP::from_tensor_poly(exterior_differential(t)));
  for (int n = 0; n < 5; ++n) {
    const Element x = random_in_ball(alg, rng), a = random_unit(alg, rng);
    EXPECT_LT(distance(dk(x, {a}) + kd(x, {a}), omega(x, {a})), 2e-5);
  }
}

INSTANTIATE_TEST_SUITE_P(Builtins, Property, ::testing::Values("real", "complex", "hyperbolic", "quaternion"),
                         [](const auto& info) { return std::string(info.param); });
