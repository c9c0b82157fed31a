#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "ncalc/algebra.hpp"

namespace ncalc {

using Integrand = std::function<Element(double)>;

struct QuadratureOptions {
  std::size_t start_panels = 4;
  std::size_t max_panels = std::size_t{1} << 14;
  /// Successive estimates must differ by less than tol * max(1, |value|).
  double tolerance = 1e-9;
};

struct QuadratureResult {
  Element value;
  std::size_t panels = 0;
  /// (panels, change against the previous estimate) for every refinement.
  std::vector<std::pair<std::size_t, double>> history;
};

/// Composite 3-point Gauss-Legendre on [a, b] with a fixed panel count.
Element gauss_legendre(const Integrand& f, const AlgebraPtr& algebra, std::size_t panels, double a = 0.0,
                       double b = 1.0);

/// Panel doubling until two successive estimates agree. Throws NoConvergence
/// when the panel cap is reached first.
QuadratureResult integrate_unit_interval(const Integrand& f, const AlgebraPtr& algebra,
                                         const QuadratureOptions& options = {});

}  // namespace ncalc
