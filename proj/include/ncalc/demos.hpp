#pragma once

// Worked examples shared by the command-line tool and the acceptance tests,
// so both report the same numbers.

#include <cstdint>
#include <string>
#include <vector>

#include "ncalc/complexfield.hpp"
#include "ncalc/forms.hpp"
#include "ncalc/integration.hpp"

namespace ncalc {

/// 1@x^2 + x@x + x^2@1
TensorPoly cubic_exact_form(const AlgebraPtr& algebra);
/// 3@x^2
TensorPoly three_x_squared_form(const AlgebraPtr& algebra);

struct PathDependence {
  Element linear;          // integral over 0 -> x
  Element two_leg;         // integral over 0 -> a -> x
  Element gap;             // two_leg - linear
  Element expected_linear;
  Element expected_two_leg;
  Element expected_gap;
  Element loop;            // 0 -> a -> x -> 0
  std::size_t panels = 0;
  std::vector<std::pair<std::size_t, double>> history;
};

/// Integrates `form` over the straight and two-leg paths. `integrable` selects
/// the closed forms: x^3 for both paths, otherwise x^3 and x^3 plus the gap
///   x^2a/2 + xax/2 - ax^2 + xa^2 - axa/2 - a^2x/2.
PathDependence path_dependence(const TensorPoly& form, const Element& a, const Element& x, bool integrable);
Element expected_gap(const Element& a, const Element& x);

/// Coefficients c0, c1, c2 of an integrand c0 + t c1 + t^2 c2 on [0, 1].
struct TPolynomial {
  Element c0, c1, c2;
  Element at(double t) const { return c0 + c1 * t + c2 * (t * t); }
  Element exact_integral() const { return c0 + c1 * 0.5 + c2 * (1.0 / 3.0); }
};
/// Expansion of (a + t(x-a))^2 (x-a) + (a + t(x-a))(x-a)(a + t(x-a)) + (x-a)(a + t(x-a))^2.
TPolynomial expansion_a1(const Element& a, const Element& x);
/// Expansion of (x-a)(a + t(x-a))^2.
TPolynomial expansion_a2(const Element& a, const Element& x);
/// The unexpanded integrands for the same two cases.
Element integrand_a1(const Element& a, const Element& x, double t);
Element integrand_a2(const Element& a, const Element& x, double t);

struct ExpCommute {
  double commuting_gap;      // a = i, b = 2i
  double noncommuting_gap;   // a = i, b = j
};
ExpCommute exp_commute_demo(std::size_t order = 30);

struct NormDemo {
  double hyperbolic_euclidean;
  double hyperbolic_rescaled;
  double complex_modulus;
  double minkowski_one_plus_j;
};
NormDemo norm_demo(std::size_t budget = 20000, std::uint64_t seed = 42);

/// The complex 1-form with a = 3(x0)^2 + 6 x0 x1 i, b = -3(x1)^2.
struct ComplexA3 {
  ComplexVerdict verdict;
  /// Spread of f(z) - reference(z) over the probes for each reference.
  double variation_eighth;     // z^3 - (z - conj z)^3 / 8
  double variation_quarter;    // z^3 - (z - conj z)^3 / 4
  double variation_components; // x0^3 - 3 x0 x1^2 + i(3 x0^2 x1 + x1^3)
  double derivative_error;     // |decompose(f) - (a, b)| at the probes
};
ComplexA3 complex_a3_demo(std::size_t probes = 20, std::uint64_t seed = 42);
Map a3_coefficient_a();
Map a3_coefficient_b();

/// max - min distance of f(z) - g(z) from its value at the first probe.
double difference_variation(const Map& f, const Map& g, const std::vector<Element>& probes);

}  // namespace ncalc
