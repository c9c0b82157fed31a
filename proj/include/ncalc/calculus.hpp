#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ncalc/poly.hpp"
#include "ncalc/polymap.hpp"

namespace ncalc {

using Map = std::function<Element(const Element&)>;

/// The k-th derivative as a function of the base point.
struct DerivativeField {
  std::size_t order = 1;
  std::function<PolyMap(const Element&)> at;

  PolyMap operator()(const Element& x) const { return at(x); }
};

inline Element eval_poly(const NoncommPoly& p, const Element& x) { return p.eval(x); }

/// Closed derivative of p: a degree-1 tensor polynomial whose coefficient
/// polynomials are the left and right parts of each monomial.
TensorPoly diff_poly_tensor(const NoncommPoly& p);
DerivativeField diff_poly(const NoncommPoly& p);

/// k-th derivative of p at x, enumerated over SO(k, n) per monomial. The
/// argument assigned to a derivative slot is recorded in the term permutation.
PolyMap diff_poly_k_at(const NoncommPoly& p, std::size_t k, const Element& x);
DerivativeField diff_poly_k(const NoncommPoly& p, std::size_t k);

struct GateauxOptions {
  /// h = step_scale * max(1, |x|)
  double step_scale = 1e-5;
};

/// Central difference with one Richardson level. Throws NonFinite.
Element gateaux(const Map& f, const Element& x, const Element& a, const GateauxOptions& options = {});

/// d/dt of a curve by the same central difference scheme as gateaux.
Element curve_derivative(const std::function<Element(double)>& curve, double t, const GateauxOptions& options = {});

/// Numeric derivative as a tensor over the given basis map family.
/// Throws DeficientFamily.
PolyMap derivative_tensor_numeric(const Map& f, const Element& x, const std::vector<std::string>& family = {"E"},
                                  const GateauxOptions& options = {});

/// Taylor polynomial of p about x0 up to order N, as a polynomial in u = x - x0.
struct TaylorPoly {
  NoncommPoly poly;  // in u
  Element center;

  Element eval(const Element& x) const { return poly.eval(x - center); }
};
TaylorPoly taylor_poly(const NoncommPoly& p, const Element& x0, std::size_t order);

/// Closed derivatives of the non-polynomial table entries.
/// d(x^-1) = -x^-1 (x) x^-1
DerivativeField d_inverse(const AlgebraPtr& algebra);
/// d(x a x^-1) = 1 (x) a x^-1 - x a x^-1 (x) x^-1
DerivativeField d_conjugate_by(const Element& a);

}  // namespace ncalc
