#include "ncalc/series.hpp"

#include <cmath>

#include "ncalc/random.hpp"

namespace ncalc {

namespace {

constexpr std::size_t kMaxOrder = 64;

double inverse_factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return 1.0 / f;
}

}  // namespace

SystemKind parse_system_kind(std::string_view name) {
  if (name == "exp") return SystemKind::Exp;
  if (name == "hyperbolic" || name == "sinh" || name == "cosh") return SystemKind::Hyperbolic;
  if (name == "elliptic" || name == "sin" || name == "cos") return SystemKind::Elliptic;
  throw Error(ErrorKind::InvalidArgument, "unknown system '" + std::string(name) + "'");
}

std::vector<ScalarSeries> solve_symmetric_system(SystemKind kind, std::size_t order) {
  if (order > kMaxOrder) throw Error(ErrorKind::TooLarge, "series order is capped at 64");
  // v[n] is the value of the n-th derivative at 0 on the diagonal (h, .., h),
  // as a multiple of h^n. Each differentiation doubles the number of words
  // and each word carries the factor 1/2, so the ratio count/2^n stays 1.
  std::vector<double> v1(order + 1), v2(order + 1);
  double count = 1.0, half = 1.0;
  if (kind == SystemKind::Exp) {
    v1[0] = 1.0;
  } else {
    v1[0] = 0.0;
    v2[0] = 1.0;
  }
  for (std::size_t n = 1; n <= order; ++n) {
    count *= 2.0;
    half *= 0.5;
    const double words = count * half;
    switch (kind) {
      case SystemKind::Exp: v1[n] = words * v1[n - 1]; break;
      case SystemKind::Hyperbolic:
        v1[n] = words * v2[n - 1];
        v2[n] = words * v1[n - 1];
        break;
      case SystemKind::Elliptic:
        v1[n] = words * v2[n - 1];
        v2[n] = -words * v1[n - 1];
        break;
    }
  }
  auto series = [&](const std::vector<double>& v) {
    ScalarSeries s;
    for (std::size_t n = 0; n <= order; ++n) s.coeffs.push_back(v[n] == 0.0 ? 0.0 : v[n] * inverse_factorial(n));
    return s;
  };
  if (kind == SystemKind::Exp) return {series(v1)};
  return {series(v1), series(v2)};
}

Element se_enumerated_derivative(SystemKind kind, std::size_t n, const Element& h) {
  const auto& alg = h.algebra();
  // Along the diagonal each SE(n) word y h..h evaluates to y(0) h^n. For the
  // two-component systems y alternates between components with every step,
  // picking up the sign of the elliptic coupling.
  double y0 = 1.0;
  if (kind != SystemKind::Exp) {
    // first component starts at 0 and is fed by the second one at odd n
    if (n % 2 == 0) y0 = 0.0;
    else y0 = kind == SystemKind::Elliptic && (n / 2) % 2 == 1 ? -1.0 : 1.0;
  }
  Element total = Element::zero(alg);
  const double w = std::ldexp(1.0, -static_cast<int>(n));
  for (const auto& word : gen_SE(n)) {
    Element acc = Element::unit(alg);
    for (int symbol : word) acc = symbol == 0 ? acc * y0 : mul(acc, h);
    total += acc * w;
  }
  return total;
}

Element eval_series(const ScalarSeries& s, const Element& x, const EvalOptions& options) {
  if (!options.allow_large && norm(x) > 10.0)
    throw Error(ErrorKind::OutOfDomain, "series evaluation refuses |x| > 10 without override");
  const auto& alg = x.algebra();
  Element acc = Element::zero(alg);
  for (std::size_t n = s.coeffs.size(); n-- > 0;) acc = mul(acc, x) + Element::scalar(alg, s.coeffs[n]);
  return acc;
}

NoncommPoly series_to_poly(const ScalarSeries& s, const AlgebraPtr& algebra) {
  NoncommPoly p(algebra);
  const NoncommPoly x = NoncommPoly::variable(algebra);
  for (std::size_t n = 0; n < s.coeffs.size(); ++n)
    if (s.coeffs[n] != 0.0) p += x.power(static_cast<unsigned>(n)).scaled(s.coeffs[n]);
  return p;
}

double second_derivative_asymmetry(const TensorPoly& g, std::size_t probes, std::uint64_t seed) {
  if (g.degree() != 1) throw Error(ErrorKind::ArityMismatch, "expected a 1-form");
  const TensorPoly dg = differentiate(g);
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < probes; ++i) {
    const Element x = random_element(g.algebra(), rng);
    const Element h1 = random_element(g.algebra(), rng);
    const Element h2 = random_element(g.algebra(), rng);
    const PolyMap d = dg.at(x);
    const Element a = d({h1, h2});
    const Element b = d({h2, h1});
    worst = std::max(worst, (a - b).coord_norm() / std::max(1.0, a.coord_norm() + b.coord_norm()));
  }
  return worst;
}

NoncommPoly indefinite_integral_taylor(const TensorPoly& g, std::size_t order, const Element& constant,
                                       std::uint64_t seed) {
  if (g.degree() != 1) throw Error(ErrorKind::ArityMismatch, "expected a 1-form");
  require_same_algebra(*g.algebra(), *constant.algebra());
  const double asym = second_derivative_asymmetry(g, 8, seed);
  if (asym > 1e-8)
    throw Error(ErrorKind::NotIntegrable,
                "second derivative is not symmetric (residual " + std::to_string(asym) + ")");
  const auto& alg = g.algebra();
  if (order == 0) order = g.poly_degree() + 1;
  const Element origin = Element::zero(alg);
  NoncommPoly f = NoncommPoly::constant(constant);
  TensorPoly d = g;
  double fact = 1.0;
  for (std::size_t n = 1; n <= order; ++n) {
    fact *= static_cast<double>(n);
    const PolyMap at_origin = d.at(origin);
    for (const auto& t : at_origin.terms())
      f += NoncommPoly::monomial(Monomial{t.weight / fact, t.coeffs, t.slots});
    if (n < order) d = differentiate(d);
  }
  return f.pruned();
}

}  // namespace ncalc
