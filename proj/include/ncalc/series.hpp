#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ncalc/poly.hpp"

namespace ncalc {

/// sum c_n x^n; powers of one element commute, so scalar coefficients suffice.
struct ScalarSeries {
  std::vector<double> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

enum class SystemKind { Exp, Hyperbolic, Elliptic };
SystemKind parse_system_kind(std::string_view name);

/// Exp yields one series; Hyperbolic yields (sinh, cosh); Elliptic (sin, cos).
/// Coefficients come from the successive-differentiation recurrence at x = 0.
/// N <= 64.
std::vector<ScalarSeries> solve_symmetric_system(SystemKind kind, std::size_t order);

/// The n-th diagonal derivative coefficient obtained by summing the SE(n)
/// words with y = 1 and every h equal to `h`: returns sum_w 2^-n w(h) for the
/// first component of the system. Used to cross-check the recurrence.
Element se_enumerated_derivative(SystemKind kind, std::size_t n, const Element& h);

struct EvalOptions {
  bool allow_large = false;  // lift the |x| <= 10 guard
};
/// Horner evaluation. Throws OutOfDomain when |x| > 10 unless allowed.
Element eval_series(const ScalarSeries& s, const Element& x, const EvalOptions& options = {});
NoncommPoly series_to_poly(const ScalarSeries& s, const AlgebraPtr& algebra);

/// Antiderivative of a degree-1 tensor polynomial by successive
/// differentiation: f(x) = C + sum_n (1/n!) D^{n-1}g(0) o (x, .., x).
/// order = 0 picks the exact order for polynomial input. Throws NotIntegrable
/// when the formal second derivative is not symmetric at 8 random probes.
NoncommPoly indefinite_integral_taylor(const TensorPoly& g, std::size_t order, const Element& constant,
                                       std::uint64_t seed = 42);

/// Largest asymmetry |Dg(x)(h1,h2) - Dg(x)(h2,h1)| over random probes,
/// relative to the size of the values.
double second_derivative_asymmetry(const TensorPoly& g, std::size_t probes, std::uint64_t seed);

}  // namespace ncalc
