#include "ncalc/quadrature.hpp"

#include <cmath>

namespace ncalc {

Element gauss_legendre(const Integrand& f, const AlgebraPtr& algebra, std::size_t panels, double a, double b) {
  if (panels == 0) throw Error(ErrorKind::InvalidArgument, "need at least one panel");
  static const double node = std::sqrt(3.0 / 5.0);
  static constexpr double w_outer = 5.0 / 9.0, w_mid = 8.0 / 9.0;
  const double width = (b - a) / static_cast<double>(panels);
  Element total = Element::zero(algebra);
  // Panels are reduced left to right so the sum is reproducible.
  for (std::size_t k = 0; k < panels; ++k) {
    const double mid = a + (static_cast<double>(k) + 0.5) * width;
    const double half = 0.5 * width;
    Element panel = f(mid - half * node) * w_outer;
    panel += f(mid) * w_mid;
    panel += f(mid + half * node) * w_outer;
    total += panel * half;
  }
  return total;
}

QuadratureResult integrate_unit_interval(const Integrand& f, const AlgebraPtr& algebra,
                                         const QuadratureOptions& options) {
  if (options.start_panels < 1) throw Error(ErrorKind::InvalidArgument, "need at least one panel");
  std::size_t panels = options.start_panels;
  QuadratureResult result{gauss_legendre(f, algebra, panels), panels, {}};
  if (!result.value.is_finite()) throw Error(ErrorKind::NonFinite, "integrand is not finite");
  while (panels < options.max_panels) {
    panels *= 2;
    Element next = gauss_legendre(f, algebra, panels);
    const double change = (next - result.value).coord_norm();
    result.history.emplace_back(panels, change);
    result.value = std::move(next);
    result.panels = panels;
    if (change < options.tolerance * std::max(1.0, result.value.coord_norm())) return result;
  }
  throw Error(ErrorKind::NoConvergence,
              "quadrature did not settle within " + std::to_string(options.max_panels) + " panels");
}

}  // namespace ncalc
