#include <gtest/gtest.h>

#include "support.hpp"
#include "ncalc/complexfield.hpp"
#include "ncalc/demos.hpp"

using namespace ncalc;
using namespace ncalc::testing;

namespace {

AlgebraPtr cx() { return builtin_algebra("complex"); }

Map poly(const std::string& text) {
  const auto p = parse_poly(cx(), text);
  return [p](const Element& z) { return p(z); };
}

}  // namespace

TEST(Decompose, Examples) {
  Rng rng(1);
  for (int n = 0; n < 10; ++n) {
    const Element z = random_in_ball(cx(), rng, 2.0);
    const CLinearMap sq = decompose_derivative([](const Element& w) { return w * w; }, z);
    EXPECT_LT(distance(sq.a, z * 2.0), 1e-8);
    EXPECT_LT(sq.b.coord_norm(), 1e-8);
    const CLinearMap cc = decompose_derivative([](const Element& w) { return conj(w) * conj(w) * conj(w); }, z);
    EXPECT_LT(cc.a.coord_norm(), 1e-8);
    EXPECT_LT(distance(cc.b, conj(z) * conj(z) * 3.0), 1e-8);
    const CLinearMap mixed = decompose_derivative([](const Element& w) { return w * conj(w) * conj(w); }, z);
    EXPECT_LT(distance(mixed.a, conj(z) * conj(z)), 1e-8);
    EXPECT_LT(distance(mixed.b, z * conj(z) * 2.0), 1e-8);
  }
}

TEST(Decompose, MatchesGateaux) {
  Rng rng(2);
  const Map f = poly("x I(x)^2 + 3x^2");
  for (int n = 0; n < 10; ++n) {
    const Element z = random_in_ball(cx(), rng), h = random_element(cx(), rng);
    EXPECT_LT(distance(decompose_derivative(f, z).apply(h), gateaux(f, z, h)), 1e-7);
  }
}

TEST(Decompose, HolomorphicDerivativeIsComplexLinear) {
  Rng rng(3);
  const Map f = poly("x^3 - 2x");
  ASSERT_EQ(classify(f).kind, Holomorphy::Holomorphic);
  const Element i = Element::basis(cx(), 1);
  for (int n = 0; n < 10; ++n) {
    const CLinearMap d = decompose_derivative(f, random_in_ball(cx(), rng));
    const Element h = random_element(cx(), rng);
    EXPECT_LT(distance(d.apply(i * h), i * d.apply(h)), 1e-8);
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(poly("x^3")).kind, Holomorphy::Holomorphic);
  EXPECT_EQ(classify(poly("I(x)^2")).kind, Holomorphy::ConjugateHolomorphic);
  EXPECT_EQ(classify(poly("x I(x)^2")).kind, Holomorphy::Neither);
}

TEST(ComplexIntegrability, Verdicts) {
  EXPECT_TRUE(form_integrable_complex(a3_coefficient_a(), a3_coefficient_b()).certified);
  EXPECT_TRUE(form_integrable_complex(poly("3"), poly("0")).certified);
  const auto bad = form_integrable_complex(a3_coefficient_a(), poly("0"));
  EXPECT_FALSE(bad.certified);
  // the residual is 6 x1 i at the witness
  const Element r = complex_integrability_residual(a3_coefficient_a(), poly("0"), bad.witness);
  EXPECT_LT(distance(r, Element(cx(), {0.0, 6.0 * bad.witness[1]})), 1e-6);
}

TEST(ComplexIntegrability, Antiderivatives) {
  Rng rng(4);
  const Map z2 = integrate_complex_form(poly("2x"), poly("0"));
  const Map zbar2 = integrate_complex_form(poly("0"), poly("2I(x)"));
  for (int n = 0; n < 10; ++n) {
    const Element z = random_in_ball(cx(), rng, 2.0);
    EXPECT_LT(distance(z2(z), z * z), 1e-7);
    EXPECT_LT(distance(zbar2(z), conj(z) * conj(z)), 1e-7);
  }
  EXPECT_EQ(z2(Element::zero(cx())), Element::zero(cx()));
  try {
    integrate_complex_form(a3_coefficient_a(), poly("0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCertified);
  }
}

TEST(ComplexIntegrability, AppendixForm) {
  const auto demo = complex_a3_demo(20, 42);
  EXPECT_TRUE(demo.verdict.certified);
  EXPECT_LT(demo.derivative_error, 1e-6);
  // the component form and z^3 - (z - conj z)^3 / 4 are the same polynomial
  EXPECT_LT(demo.variation_components, 1e-6);
  EXPECT_LT(demo.variation_quarter, 1e-6);
  // with 1/8 the difference is i (x1)^3, which is not constant
  EXPECT_GT(demo.variation_eighth, 0.1);
}

TEST(ComplexField, SecondDerivativeOfExampleIsSymmetric) {
  Rng rng(5);
  const Map f = [](const Element& w) { return w * conj(w) * conj(w); };
  for (int n = 0; n < 10; ++n) {
    const Element z = random_in_ball(cx(), rng), h1 = random_unit(cx(), rng), h2 = random_unit(cx(), rng);
    const auto d2 = [&](const Element& a, const Element& b) {
      return gateaux([&](const Element& y) { return gateaux(f, y, a); }, z, b);
    };
    EXPECT_LT(distance(d2(h1, h2), d2(h2, h1)), 1e-5);
    // 2 conj(z)(h1 conj h2 + conj h1 h2) + 2 z conj h1 conj h2
    const Element want = conj(z) * (h1 * conj(h2) + conj(h1) * h2) * 2.0 + z * conj(h1) * conj(h2) * 2.0;
    EXPECT_LT(distance(d2(h1, h2), want), 1e-5);
  }
}

TEST(ComplexField, ConjugationSkewMap) {
  Rng rng(6);
  const PolyMap f = conjugation_skew_map();
  for (int n = 0; n < 20; ++n) {
    const Element a1 = random_element(cx(), rng), a2 = random_element(cx(), rng);
    const double det = a1[0] * a2[1] - a1[1] * a2[0];
    EXPECT_LT(distance(f({a1, a2}), Element(cx(), {0.0, det})), 1e-12);
  }
}

TEST(ComplexField, JacobianRoundTrip) {
  Rng rng(7);
  for (int n = 0; n < 20; ++n) {
    const CLinearMap m{random_element(cx(), rng), random_element(cx(), rng)};
    const CLinearMap back = CLinearMap::from_jacobian(cx(), m.jacobian());
    EXPECT_LT(distance(back.a, m.a) + distance(back.b, m.b), 1e-12);
    const Element h = random_element(cx(), rng);
    EXPECT_LT(distance(m.to_polymap()({h}), m.apply(h)), 1e-12);
  }
}
