#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncalc/form.hpp"
#include "ncalc/quadrature.hpp"

namespace ncalc {

/// Either a polyline through waypoints (uniform parameter per leg) or a smooth
/// curve t -> gamma(t) on [0, 1] with an optional velocity.
class Path {
 public:
  using Curve = std::function<Element(double)>;

  /// Needs at least two waypoints from one algebra.
  static Path polyline(std::vector<Element> waypoints);
  static Path segment(const Element& a, const Element& b) { return polyline({a, b}); }
  /// Without a velocity the derivative is taken by central differences.
  static Path smooth(AlgebraPtr algebra, Curve position, Curve velocity = {});
  /// Parses {"waypoints": [[...], ...], "closed": bool}. Throws NotClosed when
  /// the document claims a loop but the endpoints differ.
  static Path from_json(const AlgebraPtr& algebra, const nlohmann::json& doc);

  const AlgebraPtr& algebra() const { return algebra_; }
  bool is_polyline() const { return !waypoints_.empty(); }
  const std::vector<Element>& waypoints() const { return waypoints_; }
  Element start() const;
  Element end() const;
  bool closed() const;

  Element position(double t) const;
  Element velocity(double t) const;

 private:
  Path() = default;
  AlgebraPtr algebra_;
  std::vector<Element> waypoints_;
  Curve position_, velocity_;
};

struct PathIntegral {
  Element value;
  std::size_t panels = 0;  // final panel count summed over legs
  std::vector<std::pair<std::size_t, double>> history;
};

/// int_0^1 omega(gamma(t)) o gamma'(t) dt by adaptive composite Gauss-Legendre.
/// Polylines integrate each leg with gamma' = difference of waypoints.
/// panels >= 4 is the starting panel count.
PathIntegral integrate_along_path(const FormP& omega, const Path& path, std::size_t panels = 4);
/// Fixed panel count, no refinement.
Element integrate_fixed(const FormP& omega, const Path& path, std::size_t panels);

struct IntegrabilityVerdict;
/// Integral over the straight segment a -> b of a certified form.
/// Throws NotCertified.
Element definite_integral(const FormP& omega, const IntegrabilityVerdict& verdict, const Element& a,
                          const Element& b);
/// Throws NotClosed.
Element loop_integral(const FormP& omega, const Path& loop);
/// Two-leg 0 -> a -> x minus the straight 0 -> x.
Element path_dependence_gap(const FormP& omega, const Element& a, const Element& x);

}  // namespace ncalc
