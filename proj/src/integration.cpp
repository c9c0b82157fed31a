#include "ncalc/integration.hpp"

#include <cmath>

#include "ncalc/forms.hpp"

namespace ncalc {

Path Path::polyline(std::vector<Element> waypoints) {
  if (waypoints.size() < 2) throw Error(ErrorKind::InvalidArgument, "a path needs at least two waypoints");
  for (const auto& w : waypoints) require_same_algebra(waypoints.front(), w);
  Path p;
  p.algebra_ = waypoints.front().algebra();
  p.waypoints_ = std::move(waypoints);
  return p;
}

Path Path::smooth(AlgebraPtr algebra, Curve position, Curve velocity) {
  if (!position) throw Error(ErrorKind::InvalidArgument, "smooth path needs a position function");
  Path p;
  p.algebra_ = std::move(algebra);
  p.position_ = std::move(position);
  p.velocity_ = std::move(velocity);
  return p;
}

Path Path::from_json(const AlgebraPtr& algebra, const nlohmann::json& doc) {
  std::vector<Element> points;
  bool closed = false;
  try {
    for (const auto& w : doc.at("waypoints")) points.emplace_back(algebra, w.get<std::vector<double>>());
    closed = doc.value("closed", false);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, e.what());
  }
  Path p = polyline(std::move(points));
  if (closed && !p.closed()) throw Error(ErrorKind::NotClosed, "path is marked closed but its endpoints differ");
  return p;
}

Element Path::start() const { return is_polyline() ? waypoints_.front() : position_(0.0); }
Element Path::end() const { return is_polyline() ? waypoints_.back() : position_(1.0); }

bool Path::closed() const { return (end() - start()).coord_norm() <= 1e-12; }

Element Path::position(double t) const {
  if (!is_polyline()) return position_(t);
  const std::size_t legs = waypoints_.size() - 1;
  const double s = std::clamp(t, 0.0, 1.0) * static_cast<double>(legs);
  const std::size_t leg = std::min(static_cast<std::size_t>(s), legs - 1);
  const double u = s - static_cast<double>(leg);
  return waypoints_[leg] + (waypoints_[leg + 1] - waypoints_[leg]) * u;
}

Element Path::velocity(double t) const {
  if (!is_polyline()) return velocity_ ? velocity_(t) : curve_derivative(position_, t);
  const std::size_t legs = waypoints_.size() - 1;
  const std::size_t leg = std::min(static_cast<std::size_t>(std::clamp(t, 0.0, 1.0) * legs), legs - 1);
  return (waypoints_[leg + 1] - waypoints_[leg]) * static_cast<double>(legs);
}

namespace {

void require_one_form(const FormP& omega, const Path& path) {
  if (omega.degree() != 1) throw Error(ErrorKind::ArityMismatch, "path integrals need a 1-form");
  require_same_algebra(*omega.algebra(), *path.algebra());
}

// Each leg of a polyline is integrated on its own unit interval with the
// constant velocity b - a, so the integrand stays smooth.
template <typename LegFn>
void for_each_leg(const Path& path, LegFn&& fn) {
  if (path.is_polyline()) {
    const auto& w = path.waypoints();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const Element a = w[i], delta = w[i + 1] - w[i];
      fn([a, delta](double t) { return a + delta * t; }, [delta](double) { return delta; });
    }
  } else {
    fn([&path](double t) { return path.position(t); }, [&path](double t) { return path.velocity(t); });
  }
}

}  // namespace

PathIntegral integrate_along_path(const FormP& omega, const Path& path, std::size_t panels) {
  require_one_form(omega, path);
  if (panels < 4) throw Error(ErrorKind::InvalidArgument, "path integration needs at least 4 panels");
  PathIntegral out{Element::zero(path.algebra()), 0, {}};
  QuadratureOptions options;
  options.start_panels = panels;
  for_each_leg(path, [&](auto position, auto velocity) {
    const auto result = integrate_unit_interval(
        [&](double t) {
          const Element v = velocity(t);
          return omega(position(t), std::span<const Element>(&v, 1));
        },
        path.algebra(), options);
    out.value += result.value;
    out.panels += result.panels;
    out.history.insert(out.history.end(), result.history.begin(), result.history.end());
  });
  return out;
}

Element integrate_fixed(const FormP& omega, const Path& path, std::size_t panels) {
  require_one_form(omega, path);
  Element total = Element::zero(path.algebra());
  for_each_leg(path, [&](auto position, auto velocity) {
    total += gauss_legendre(
        [&](double t) {
          const Element v = velocity(t);
          return omega(position(t), std::span<const Element>(&v, 1));
        },
        path.algebra(), panels);
  });
  return total;
}

Element definite_integral(const FormP& omega, const IntegrabilityVerdict& verdict, const Element& a,
                          const Element& b) {
  if (!verdict.certified) throw Error(ErrorKind::NotCertified, "form has not been certified integrable");
  if ((b - a).coord_norm() == 0.0) return Element::zero(a.algebra());
  return integrate_along_path(omega, Path::segment(a, b)).value;
}

Element loop_integral(const FormP& omega, const Path& loop) {
  if (!loop.closed()) throw Error(ErrorKind::NotClosed, "loop endpoints differ");
  if (loop.is_polyline()) {
    bool degenerate = true;
    for (const auto& w : loop.waypoints()) degenerate = degenerate && (w - loop.start()).coord_norm() == 0.0;
    if (degenerate) return Element::zero(loop.algebra());
  }
  return integrate_along_path(omega, loop).value;
}

Element path_dependence_gap(const FormP& omega, const Element& a, const Element& x) {
  const Element origin = Element::zero(x.algebra());
  const Element two_leg = integrate_along_path(omega, Path::polyline({origin, a, x})).value;
  const Element straight = integrate_along_path(omega, Path::segment(origin, x)).value;
  return two_leg - straight;
}

}  // namespace ncalc
