#include "ncalc/calculus.hpp"

#include <cmath>

namespace ncalc {

TensorPoly diff_poly_tensor(const NoncommPoly& p) { return differentiate(TensorPoly::from_poly(p)); }

DerivativeField diff_poly(const NoncommPoly& p) {
  auto tensor = std::make_shared<const TensorPoly>(diff_poly_tensor(p));
  return {1, [tensor](const Element& x) { return tensor->at(x); }};
}

PolyMap diff_poly_k_at(const NoncommPoly& p, std::size_t k, const Element& x) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "derivative order must be positive");
  const auto& alg = p.algebra();
  PolyMap out(alg, k);
  std::vector<Element> mapped;
  for (std::size_t s = 0; s < alg->basis_map_count(); ++s) mapped.push_back(apply_basis_map(s, x));
  for (const auto& m : p.monomials()) {
    const std::size_t n = m.degree();
    if (n < k) continue;
    for (const auto& placement : gen_SO(k, n)) {
      Term t;
      t.weight = m.weight;
      Element acc = m.coeffs[0];
      for (std::size_t pos = 0; pos < n; ++pos) {
        if (placement[pos] < k) {
          t.coeffs.push_back(acc);
          t.slots.push_back(m.slots[pos]);
          t.perm.image.push_back(placement[pos]);
          acc = m.coeffs[pos + 1];
        } else {
          acc = mul(mul(acc, mapped[m.slots[pos]]), m.coeffs[pos + 1]);
        }
      }
      t.coeffs.push_back(acc);
      out.add_term(std::move(t));
    }
  }
  return out;
}

DerivativeField diff_poly_k(const NoncommPoly& p, std::size_t k) {
  return {k, [p, k](const Element& x) { return diff_poly_k_at(p, k, x); }};
}

Element gateaux(const Map& f, const Element& x, const Element& a, const GateauxOptions& options) {
  const double scale = a.coord_norm();
  if (scale == 0.0) return Element::zero(x.algebra());
  const Element dir = a / scale;
  const double h = options.step_scale * std::max(1.0, x.coord_norm());
  auto central = [&](double t) {
    const Element plus = f(x + dir * t);
    const Element minus = f(x - dir * t);
    if (!plus.is_finite() || !minus.is_finite())
      throw Error(ErrorKind::NonFinite, "map returned a non-finite value near the probe point");
    return (plus - minus) / (2.0 * t);
  };
  const Element coarse = central(h);
  const Element fine = central(h / 2.0);
  Element d = (fine * 4.0 - coarse) / 3.0;
  if (!d.is_finite()) throw Error(ErrorKind::NonFinite, "derivative estimate is not finite");
  return d * scale;
}

Element curve_derivative(const std::function<Element(double)>& curve, double t, const GateauxOptions& options) {
  const double h = options.step_scale * std::max(1.0, std::abs(t));
  auto central = [&](double s) { return (curve(t + s) - curve(t - s)) / (2.0 * s); };
  Element d = (central(h / 2.0) * 4.0 - central(h)) / 3.0;
  if (!d.is_finite()) throw Error(ErrorKind::NonFinite, "velocity estimate is not finite");
  return d;
}

PolyMap derivative_tensor_numeric(const Map& f, const Element& x, const std::vector<std::string>& family,
                                  const GateauxOptions& options) {
  const auto& alg = x.algebra();
  const auto n = static_cast<Eigen::Index>(alg->dim());
  Eigen::MatrixXd j(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Element d = gateaux(f, x, Element::basis(alg, static_cast<std::size_t>(i)), options);
    for (Eigen::Index r = 0; r < n; ++r) j(r, i) = d[static_cast<std::size_t>(r)];
  }
  return jacobian_to_tensor(alg, j, family);
}

TaylorPoly taylor_poly(const NoncommPoly& p, const Element& x0, std::size_t order) {
  const auto& alg = p.algebra();
  NoncommPoly u(alg);
  u += NoncommPoly::constant(p.eval(x0));
  double fact = 1.0;
  for (std::size_t k = 1; k <= order; ++k) {
    fact *= static_cast<double>(k);
    const PolyMap dk = diff_poly_k_at(p, k, x0);
    for (const auto& t : dk.terms()) {
      // All arguments equal u, so the permutation does not matter.
      u += NoncommPoly::monomial(Monomial{t.weight / fact, t.coeffs, t.slots});
    }
  }
  return {u.pruned(), x0};
}

DerivativeField d_inverse(const AlgebraPtr& algebra) {
  return {1, [algebra](const Element& x) {
            const Element xi = inv(x);
            return PolyMap::single({xi, xi}, {0}, -1.0);
          }};
}

DerivativeField d_conjugate_by(const Element& a) {
  return {1, [a](const Element& x) {
            const auto& alg = x.algebra();
            const Element xi = inv(x);
            PolyMap f = PolyMap::single({Element::unit(alg), mul(a, xi)});
            f += PolyMap::single({mul(mul(x, a), xi), xi}, {0}, -1.0);
            return f;
          }};
}

}  // namespace ncalc
