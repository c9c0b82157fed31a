#include "ncalc/complexfield.hpp"

#include <cmath>

#include "ncalc/random.hpp"

namespace ncalc {

namespace {

const AlgebraPtr& complex_algebra() {
  static const AlgebraPtr c = builtin_algebra("complex");
  return c;
}

void require_complex(const Element& z) {
  if (!z.algebra()->same_structure(*complex_algebra()))
    throw Error(ErrorKind::AlgebraMismatch, "expected a complex number");
}

}  // namespace

Element complex_number(double re, double im) { return Element(complex_algebra(), {re, im}); }

Element conj(const Element& z) {
  require_complex(z);
  return apply_basis_map("I", z);
}

Element CLinearMap::apply(const Element& c) const { return mul(a, c) + mul(b, conj(c)); }

Eigen::Matrix2d CLinearMap::jacobian() const {
  Eigen::Matrix2d j;
  const Element c0 = apply(complex_number(1, 0)), c1 = apply(complex_number(0, 1));
  j << c0[0], c1[0], c0[1], c1[1];
  return j;
}

CLinearMap CLinearMap::from_jacobian(const AlgebraPtr& complex, const Eigen::Matrix2d& j) {
  if (!complex->same_structure(*complex_algebra())) throw Error(ErrorKind::AlgebraMismatch, "expected complex");
  return {Element(complex, {0.5 * (j(0, 0) + j(1, 1)), 0.5 * (j(1, 0) - j(0, 1))}),
          Element(complex, {0.5 * (j(0, 0) - j(1, 1)), 0.5 * (j(1, 0) + j(0, 1))})};
}

PolyMap CLinearMap::to_polymap() const {
  const auto& alg = a.algebra();
  PolyMap f = PolyMap::single({a, Element::unit(alg)}, {0});
  f += PolyMap::single({b, Element::unit(alg)}, {alg->basis_map_index("I")});
  return f;
}

CLinearMap decompose_derivative(const Map& f, const Element& z, const GateauxOptions& options) {
  require_complex(z);
  const Element i = complex_number(0, 1);
  const Element d0 = gateaux(f, z, complex_number(1, 0), options);
  const Element d1 = gateaux(f, z, i, options);
  const Element id1 = mul(i, d1);
  return {(d0 - id1) * 0.5, (d0 + id1) * 0.5};
}

std::string to_string(Holomorphy h) {
  switch (h) {
    case Holomorphy::Holomorphic: return "Holomorphic";
    case Holomorphy::ConjugateHolomorphic: return "ConjugateHolomorphic";
    case Holomorphy::Neither: return "Neither";
  }
  return "?";
}

Classification classify(const Map& f, std::size_t probes, std::uint64_t seed) {
  Rng rng(seed);
  Classification c{Holomorphy::Neither};
  for (std::size_t k = 0; k < probes; ++k) {
    const Element z = random_in_ball(complex_algebra(), rng, 2.0);
    const CLinearMap d = decompose_derivative(f, z);
    c.max_a = std::max(c.max_a, norm(d.a));
    c.max_b = std::max(c.max_b, norm(d.b));
  }
  if (c.max_b < 1e-7) c.kind = Holomorphy::Holomorphic;
  else if (c.max_a < 1e-7) c.kind = Holomorphy::ConjugateHolomorphic;
  return c;
}

Element complex_integrability_residual(const Map& a, const Map& b, const Element& z) {
  const Element e0 = complex_number(1, 0), i = complex_number(0, 1);
  const Element a0 = gateaux(a, z, e0), a1 = gateaux(a, z, i);
  const Element b0 = gateaux(b, z, e0), b1 = gateaux(b, z, i);
  return a0 + mul(i, a1) - b0 + mul(i, b1);
}

ComplexVerdict form_integrable_complex(const Map& a, const Map& b, std::size_t probes, std::uint64_t seed) {
  Rng rng(seed);
  ComplexVerdict v{false, 0.0, Element::zero(complex_algebra())};
  for (std::size_t k = 0; k < probes; ++k) {
    const Element z = random_in_ball(complex_algebra(), rng);
    const double r = norm(complex_integrability_residual(a, b, z));
    if (k == 0 || r > v.max_residual) v.max_residual = r, v.witness = z;
  }
  v.certified = v.max_residual < 1e-6;
  return v;
}

FormP complex_form(const Map& a, const Map& b) {
  return FormP(complex_algebra(), 1, [a, b](const Element& x, std::span<const Element> args) {
    return mul(a(x), args[0]) + mul(b(x), conj(args[0]));
  });
}

Map integrate_complex_form(const Map& a, const Map& b, std::size_t probes, std::uint64_t seed) {
  const auto verdict = form_integrable_complex(a, b, probes, seed);
  if (!verdict.certified)
    throw Error(ErrorKind::NotCertified,
                "form fails the integrability condition (residual " + std::to_string(verdict.max_residual) + ")");
  const FormP k = poincare_k(complex_form(a, b));
  return [k](const Element& z) { return k.value(z); };
}

PolyMap conjugation_skew_map() {
  const auto& alg = complex_algebra();
  const std::size_t i = alg->basis_map_index("I");
  const Element one = Element::unit(alg);
  PolyMap f = PolyMap::single({one, one, one}, {i, 0}, 0.5);
  f += PolyMap::single({one, one, one}, {0, i}, -0.5);
  return f;
}

}  // namespace ncalc
