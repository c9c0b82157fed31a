#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>

#include "ncalc/calculus.hpp"
#include "ncalc/poly.hpp"

namespace ncalc {

/// Smoothness asserted by whoever builds the form. Nothing verifies it.
enum class Smoothness { C0 = 0, C1 = 1, C2 = 2, CInf = 100 };

Smoothness lower_smoothness(Smoothness s);

/// A differential p-form: x -> skew-symmetric polylinear map of degree p.
class FormP {
 public:
  using Evaluator = std::function<Element(const Element& x, std::span<const Element> args)>;

  /// Degree >= 2 forms are sampled for skew symmetry. Throws NotSkew.
  FormP(AlgebraPtr algebra, std::size_t degree, Evaluator evaluator, Smoothness smoothness = Smoothness::CInf,
        double domain_radius = std::numeric_limits<double>::infinity(), bool check_skew = true);

  /// Polynomial form; keeps the closed tensor for symbolic operations.
  static FormP from_tensor_poly(const TensorPoly& tensor);
  static FormP from_field(const AlgebraPtr& algebra, std::size_t degree, std::function<PolyMap(const Element&)> field,
                          Smoothness smoothness = Smoothness::CInf);
  /// Degree-0 form given by a map.
  static FormP from_map(const AlgebraPtr& algebra, Map f, Smoothness smoothness = Smoothness::CInf);
  static FormP from_poly(const NoncommPoly& f);
  /// df for a polynomial f, in closed form.
  static FormP exact(const NoncommPoly& f);
  static FormP zero(const AlgebraPtr& algebra, std::size_t degree);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t degree() const { return degree_; }
  Smoothness smoothness() const { return smoothness_; }
  double domain_radius() const { return domain_radius_; }
  const std::optional<TensorPoly>& tensor() const { return tensor_; }
  const Evaluator& evaluator() const { return evaluator_; }

  Element operator()(const Element& x, std::span<const Element> args) const;
  Element operator()(const Element& x, std::initializer_list<Element> args) const {
    return (*this)(x, std::span<const Element>(args.begin(), args.size()));
  }
  /// Value of a degree-0 form.
  Element value(const Element& x) const { return (*this)(x, std::span<const Element>{}); }

  FormP with_domain_radius(double radius) const;
  FormP with_smoothness(Smoothness s) const;

 private:
  AlgebraPtr algebra_;
  std::size_t degree_;
  Evaluator evaluator_;
  Smoothness smoothness_;
  double domain_radius_;
  std::optional<TensorPoly> tensor_;
};

/// Largest skew violation of the form over random points and arguments.
double form_skew_residual(const FormP& form, std::size_t probes, std::uint64_t seed);

}  // namespace ncalc
