#include "ncalc/form.hpp"

#include <cmath>

#include "ncalc/random.hpp"

namespace ncalc {

Smoothness lower_smoothness(Smoothness s) {
  switch (s) {
    case Smoothness::CInf: return Smoothness::CInf;
    case Smoothness::C2: return Smoothness::C1;
    case Smoothness::C1: return Smoothness::C0;
    case Smoothness::C0: break;
  }
  throw Error(ErrorKind::InvalidArgument, "cannot differentiate a C0 form");
}

FormP::FormP(AlgebraPtr algebra, std::size_t degree, Evaluator evaluator, Smoothness smoothness,
             double domain_radius, bool check_skew)
    : algebra_(std::move(algebra)),
      degree_(degree),
      evaluator_(std::move(evaluator)),
      smoothness_(smoothness),
      domain_radius_(domain_radius) {
  if (!evaluator_) throw Error(ErrorKind::InvalidArgument, "form needs an evaluator");
  if (check_skew && degree_ >= 2) {
    const double r = form_skew_residual(*this, 3, 0x5eed);
    if (r >= 1e-9) throw Error(ErrorKind::NotSkew, "form values are not skew-symmetric (residual " + std::to_string(r) + ")");
  }
}

Element FormP::operator()(const Element& x, std::span<const Element> args) const {
  if (args.size() != degree_)
    throw Error(ErrorKind::ArityMismatch,
                "form of degree " + std::to_string(degree_) + " got " + std::to_string(args.size()) + " arguments");
  require_same_algebra(*algebra_, *x.algebra());
  return evaluator_(x, args);
}

FormP FormP::from_tensor_poly(const TensorPoly& tensor) {
  auto shared = std::make_shared<const TensorPoly>(tensor);
  FormP form(tensor.algebra(), tensor.degree(),
             [shared](const Element& x, std::span<const Element> args) { return shared->apply(x, args); });
  form.tensor_ = tensor;
  return form;
}

FormP FormP::from_field(const AlgebraPtr& algebra, std::size_t degree, std::function<PolyMap(const Element&)> field,
                        Smoothness smoothness) {
  return FormP(
      algebra, degree,
      [field = std::move(field)](const Element& x, std::span<const Element> args) { return field(x).apply(args); },
      smoothness);
}

FormP FormP::from_map(const AlgebraPtr& algebra, Map f, Smoothness smoothness) {
  return FormP(
      algebra, 0, [f = std::move(f)](const Element& x, std::span<const Element>) { return f(x); }, smoothness);
}

FormP FormP::from_poly(const NoncommPoly& f) { return from_tensor_poly(TensorPoly::from_poly(f)); }

FormP FormP::exact(const NoncommPoly& f) { return from_tensor_poly(diff_poly_tensor(f)); }

FormP FormP::zero(const AlgebraPtr& algebra, std::size_t degree) {
  FormP form(
      algebra, degree, [algebra](const Element&, std::span<const Element>) { return Element::zero(algebra); },
      Smoothness::CInf, std::numeric_limits<double>::infinity(), false);
  form.tensor_ = TensorPoly(algebra, degree);
  return form;
}

FormP FormP::with_domain_radius(double radius) const {
  FormP f = *this;
  f.domain_radius_ = radius;
  return f;
}

FormP FormP::with_smoothness(Smoothness s) const {
  FormP f = *this;
  f.smoothness_ = s;
  return f;
}

double form_skew_residual(const FormP& form, std::size_t probes, std::uint64_t seed) {
  const std::size_t n = form.degree();
  if (n < 2) return 0.0;
  Rng rng(seed);
  double worst = 0.0;
  const double radius = std::isfinite(form.domain_radius()) ? form.domain_radius() : 1.0;
  for (std::size_t probe = 0; probe < probes; ++probe) {
    const Element x = random_in_ball(form.algebra(), rng, radius);
    std::vector<Element> args;
    for (std::size_t i = 0; i < n; ++i) args.push_back(random_element(form.algebra(), rng));
    const Element base = form(x, args);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      auto swapped = args;
      std::swap(swapped[i], swapped[i + 1]);
      worst = std::max(worst, (base + form(x, swapped)).coord_norm() / std::max(1.0, base.coord_norm()));
    }
  }
  return worst;
}

}  // namespace ncalc
