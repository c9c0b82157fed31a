#pragma once

// The complex field as a real algebra with basis maps E and I.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "ncalc/calculus.hpp"
#include "ncalc/forms.hpp"

namespace ncalc {

/// c -> a c + b conj(c)
struct CLinearMap {
  Element a;
  Element b;

  Element apply(const Element& c) const;
  Eigen::Matrix2d jacobian() const;
  static CLinearMap from_jacobian(const AlgebraPtr& complex, const Eigen::Matrix2d& j);
  PolyMap to_polymap() const;
};

Element conj(const Element& z);
Element complex_number(double re, double im);

/// a = (f_0 - i f_1)/2, b = (f_0 + i f_1)/2 from central-difference partials.
CLinearMap decompose_derivative(const Map& f, const Element& z, const GateauxOptions& options = {});

enum class Holomorphy { Holomorphic, ConjugateHolomorphic, Neither };
std::string to_string(Holomorphy h);

struct Classification {
  Holomorphy kind;
  double max_a = 0.0;
  double max_b = 0.0;
};
/// Samples the disc of radius 2. Holomorphic when max |b| < 1e-7, conjugate
/// holomorphic when max |a| < 1e-7.
Classification classify(const Map& f, std::size_t probes = 20, std::uint64_t seed = 42);

struct ComplexVerdict {
  bool certified = false;
  double max_residual = 0.0;
  Element witness;
};
/// Left side of the integrability condition
///   da/dx0 + i da/dx1 - db/dx0 + i db/dx1 = 0
/// at probes in the unit disc; certified when below 1e-6.
ComplexVerdict form_integrable_complex(const Map& a, const Map& b, std::size_t probes = 20, std::uint64_t seed = 42);
Element complex_integrability_residual(const Map& a, const Map& b, const Element& z);

/// The 1-form x -> a(x) E + b(x) I.
FormP complex_form(const Map& a, const Map& b);

/// Antiderivative with f(0) = 0 through the Poincare operator.
/// Throws NotCertified.
Map integrate_complex_form(const Map& a, const Map& b, std::size_t probes = 20, std::uint64_t seed = 42);

/// f(a1, a2) = ((I a1) a2 - a1 (I a2)) / 2 as a degree-2 tensor.
PolyMap conjugation_skew_map();

}  // namespace ncalc
