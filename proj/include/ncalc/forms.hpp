#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncalc/form.hpp"
#include "ncalc/integration.hpp"

namespace ncalc {

/// Pointwise exterior product. Throws NotSkew.
FormP wedge_forms(const FormP& alpha, const FormP& beta);

/// d omega by central differences:
///   d omega(x) o (a0..ap) = sum_i (-1)^i D_{a_i}[omega(.) o (a0..^ai..ap)](x)
/// Needs a form asserted at least C1.
FormP exterior_differential(const FormP& omega, const GateauxOptions& options = {});
/// The same operator on a polynomial form, in closed form.
TensorPoly exterior_differential(const TensorPoly& omega);

/// Largest |d(d omega)(x) o args| / prod |args| over random probes.
double d_squared_residual(const FormP& omega, std::size_t probes, std::uint64_t seed = 42);

struct IntegrabilityVerdict {
  bool certified = false;
  double max_residual = 0.0;
  /// Point and arguments where |d omega| was largest.
  std::optional<Element> x, a1, a2;
};

/// Certifies a 1-form when |d omega(x) o (a1, a2)| < 1e-6 for unit arguments at
/// every probe point in the unit ball.
IntegrabilityVerdict check_integrable(const FormP& omega, std::size_t probes = 32, std::uint64_t seed = 42);

/// Poincare operator:
///   k(omega)(x) o (a1..a_{p-1}) = int_0^1 t^{p-1} omega(tx) o (x, a1..) dt
/// k of a 0-form is the zero form. Evaluating the result outside the form's
/// domain radius triggers the warning handler.
FormP poincare_k(const FormP& omega, const QuadratureOptions& options = {});

using WarningHandler = std::function<void(const std::string&)>;
/// Replaces the warning sink (stderr by default); returns the previous one.
WarningHandler set_warning_handler(WarningHandler handler);

/// omega_{i1..ip}(x) = omega(x) o (e_{i1}, .., e_{ip}), flattened row-major.
std::vector<Element> form_coordinates(const FormP& omega, const Element& x);
/// Rebuilds omega(x) o args from its coordinates.
Element evaluate_from_coordinates(const std::vector<Element>& coords, std::span<const Element> args);

/// x -> omega(x + shift): moves a star centre at `shift` to the origin.
FormP translate(const FormP& omega, const Element& shift);

}  // namespace ncalc
